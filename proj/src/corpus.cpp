// Corpus generation, persistence and the validator runner.

#include "pw/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace pw {

namespace {

CorpusEntry make_entry(Poset P, const Limits& limits) {
  std::string id = poset_id(P);
  FinDLat L = birkhoff_lattice(P, limits);
  FinPriestley X(P, limits);
  return {std::move(id), std::move(P), std::move(L), std::move(X)};
}

std::string hash_ids(const std::vector<CorpusEntry>& entries) {
  std::string ids;
  for (const auto& e : entries) ids += e.id + "\n";
  return fnv1a_hex(ids);
}

}  // namespace

Corpus gen_corpus(int max_size, const Limits& limits) {
  Corpus c;
  c.max_size = max_size;
  for (int n = 0; n <= max_size; ++n)
    for (Poset& P : enumerate_posets(n, limits)) c.entries.push_back(make_entry(std::move(P), limits));
  c.content_hash = hash_ids(c.entries);
  return c;
}

Json corpus_to_json(const Corpus& c) {
  Json j;
  Json manifest;
  manifest["maxPosetSize"] = c.max_size;
  manifest["entries"] = c.entries.size();
  manifest["hash"] = c.content_hash;
  j["manifest"] = std::move(manifest);
  Json entries = Json::array();
  for (const auto& e : c.entries) {
    Json entry;
    entry["id"] = e.id;
    entry["poset"] = poset_to_json(e.poset);
    entries.push_back(std::move(entry));
  }
  j["entries"] = std::move(entries);
  return j;
}

Corpus corpus_from_json(const Json& j, const Limits& limits) {
  Corpus c;
  try {
    if (!j.is_object() || !j.contains("entries")) throw ParseError("corpus document needs \"entries\"");
    if (j.contains("manifest")) c.max_size = j.at("manifest").value("maxPosetSize", 0);
    for (const auto& e : j.at("entries")) {
      CorpusEntry entry = make_entry(poset_from_json(e.at("poset")), limits);
      if (e.contains("id") && e.at("id").get<std::string>() != entry.id)
        throw ParseError("corpus entry id " + e.at("id").get<std::string>() + " does not match its poset");
      c.max_size = std::max(c.max_size, entry.poset.size());
      c.entries.push_back(std::move(entry));
    }
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed corpus document: ") + e.what());
  }
  c.content_hash = hash_ids(c.entries);
  return c;
}

std::vector<ValidationReport> run_validators(const Corpus& c, const std::vector<Validator>& validators, int jobs) {
  std::vector<FinDLat> lattices;
  for (const auto& e : c.entries) lattices.push_back(e.lattice);
  const std::size_t total = c.entries.size() * validators.size();
  std::vector<ValidationReport> reports(total);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < total;) {
      const auto& e = c.entries[i / validators.size()];
      reports[i] = validate(validators[i % validators.size()], e.lattice, e.id, lattices);
    }
  };
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  std::stable_sort(reports.begin(), reports.end(), [](const ValidationReport& a, const ValidationReport& b) {
    if (a.lattice != b.lattice) return a.lattice < b.lattice;
    return a.validator < b.validator;
  });
  return reports;
}

}  // namespace pw
