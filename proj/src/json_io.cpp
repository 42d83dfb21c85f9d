// JSON documents.

#include "pw/json_io.hpp"

#include <fstream>
#include <sstream>

namespace pw {

namespace {

template <typename F>
auto parsing(std::string_view what, F&& body) {
  try {
    return body();
  } catch (const Json::exception& e) {
    throw ParseError("malformed " + std::string(what) + " document: " + e.what());
  }
}

Json mask_list(Mask m) {
  Json out = Json::array();
  for_each_bit(m, [&](int i) { out.push_back(i); });
  return out;
}

}  // namespace

Json poset_to_json(const Poset& P) {
  Json j;
  j["size"] = P.size();
  Json covers = Json::array();
  for (const auto& [a, b] : P.covers()) covers.push_back({a, b});
  j["covers"] = std::move(covers);
  bool custom = false;
  for (int p = 0; p < P.size(); ++p) custom = custom || P.label(p) != "p" + std::to_string(p);
  if (custom) {
    Json labels = Json::array();
    for (int p = 0; p < P.size(); ++p) labels.push_back(P.label(p));
    j["labels"] = std::move(labels);
  }
  return j;
}

Poset poset_from_json(const Json& j) {
  return parsing("poset", [&] {
    if (!j.is_object() || !j.contains("size")) throw ParseError("poset document needs a \"size\"");
    const int size = j.at("size").get<int>();
    if (size < 0) throw ParseError("poset size must be non-negative");
    if (size > kMaxPoints) throw CapacityError("posets are limited to " + std::to_string(kMaxPoints) + " points");
    std::vector<Cover> covers;
    if (j.contains("covers"))
      for (const auto& c : j.at("covers")) {
        if (!c.is_array() || c.size() != 2) throw ParseError("each cover must be a pair [i, j]");
        covers.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
      }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return Poset::from_covers(size, covers, std::move(labels));
  });
}

Json lattice_to_json(const FinDLat& L) {
  Json j;
  if (L.birkhoff_poset()) {
    j["birkhoff"] = poset_to_json(*L.birkhoff_poset());
    return j;
  }
  if (L.is_distributive()) {
    j["birkhoff"] = poset_to_json(priestley_space_of(L).space.points());
    return j;
  }
  j["elements"] = L.size();
  Json leq = Json::array();
  for (const auto& [a, b] : L.order().covers()) leq.push_back({a, b});
  j["leq"] = std::move(leq);
  j["bottom"] = L.bottom();
  j["top"] = L.top();
  return j;
}

FinDLat lattice_from_json(const Json& j) {
  return parsing("lattice", [&]() -> FinDLat {
    if (!j.is_object()) throw ParseError("lattice document must be an object");
    if (j.contains("birkhoff")) return birkhoff_lattice(poset_from_json(j.at("birkhoff")));
    if (j.contains("elements")) {
      const int n = j.at("elements").get<int>();
      if (n < 1) throw ParseError("a lattice needs at least one element");
      if (n > kMaxPoints) throw CapacityError("lattices are limited to " + std::to_string(kMaxPoints) + " elements");
      std::vector<Cover> leq;
      for (const auto& c : j.at("leq")) {
        if (!c.is_array() || c.size() != 2) throw ParseError("each leq entry must be a pair [i, j]");
        const int a = c.at(0).get<int>(), b = c.at(1).get<int>();
        if (a != b) leq.emplace_back(a, b);
      }
      FinDLat L = FinDLat::from_order(Poset::from_covers(n, leq));
      if (j.contains("bottom") && j.at("bottom").get<int>() != L.bottom())
        throw ParseError("declared bottom is not the least element");
      if (j.contains("top") && j.at("top").get<int>() != L.top())
        throw ParseError("declared top is not the greatest element");
      return L;
    }
    if (j.contains("size")) return birkhoff_lattice(poset_from_json(j));
    throw ParseError("lattice document needs \"birkhoff\" or \"elements\"");
  });
}

Json space_to_json(const FinPriestley& X) {
  Json j;
  j["priestley"] = poset_to_json(X.points());
  return j;
}

FinPriestley space_from_json(const Json& j) {
  return parsing("space", [&] {
    if (j.is_object() && j.contains("priestley")) return FinPriestley(poset_from_json(j.at("priestley")));
    if (j.is_object() && j.contains("size")) return FinPriestley(poset_from_json(j));
    throw ParseError("space document needs \"priestley\"");
  });
}

Json chain_to_json(const ChainFrame& C) {
  Json j;
  Json word = Json::array();
  if (C.is_degenerate()) {
    word.push_back("one");
  } else {
    for (const Block& b : C.blocks()) word.push_back(ChainFrame(std::vector<Block>{b}).to_string());
  }
  j["chain"] = std::move(word);
  return j;
}

ChainFrame chain_from_json(const Json& j) {
  return parsing("chain", [&] {
    if (!j.is_object() || !j.contains("chain")) throw ParseError("chain document needs \"chain\"");
    const auto& word = j.at("chain");
    if (word.is_string()) return ChainFrame::parse(word.get<std::string>());
    std::string text;
    for (const auto& tok : word) {
      if (!text.empty()) text += "+";
      text += tok.get<std::string>();
    }
    return ChainFrame::parse(text);
  });
}

Json stone_record_to_json(const StoneMapRecord& rec) {
  Json j = space_to_json(rec.space);
  j["lattice"] = lattice_to_json(rec.lattice);
  Json filters = Json::array();
  for (Mask F : rec.filters) filters.push_back(mask_list(F));
  j["filters"] = std::move(filters);
  Json phi = Json::array();
  for (Mask U : rec.phi) phi.push_back(mask_list(U));
  j["phi"] = std::move(phi);
  return j;
}

Json report_to_json(const ValidationReport& r, bool with_timing) {
  Json j;
  j["lattice"] = r.lattice;
  j["validator"] = std::string(to_string(r.validator));
  j["status"] = r.pass ? "pass" : "fail";
  if (!r.witness.empty()) {
    Json w = Json::object();
    for (const auto& [k, v] : r.witness) w[k] = v;
    j["witness"] = std::move(w);
  }
  if (!r.sides.empty()) {
    Json s = Json::object();
    for (const auto& [k, v] : r.sides) s[k] = v;
    j["sides"] = std::move(s);
  }
  j["micros"] = with_timing ? r.micros : 0;
  return j;
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[i] = digits[h & 0xf];
  return out;
}

std::string poset_id(const Poset& P) {
  const Poset C = canonical_poset(P);
  return fnv1a_hex(poset_to_json(Poset::from_up_masks(C.up_masks())).dump());
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

}  // namespace pw
