// Symbolic complete chains: normal forms, comparison, limits, way-below and
// closed-form frame predicates.

#include "pw/chains.hpp"

#include <algorithm>
#include <charconv>

namespace pw {

ChainFrame::ChainFrame(std::vector<Block> blocks) {
  for (const Block& b : blocks) {
    if (b.kind == BlockKind::Fin && b.length < 1) throw NormalizationError("Fin blocks need length at least 1");
    if (!blocks_.empty()) {
      Block& last = blocks_.back();
      if (last.kind == BlockKind::Fin && b.kind == BlockKind::Fin) {
        last.length += b.length;
        continue;
      }
      if (last.kind == BlockKind::Dense && b.kind == BlockKind::Dense) continue;
    }
    blocks_.push_back(b.kind == BlockKind::Fin ? b : Block{b.kind, 0});
  }
}

ChainFrame ChainFrame::degenerate() {
  ChainFrame c;
  c.degenerate_ = true;
  return c;
}

ChainFrame ChainFrame::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty() || text == "empty") return ChainFrame();
  if (text == "one") return degenerate();
  std::vector<Block> blocks;
  while (!text.empty()) {
    std::size_t plus = text.find('+');
    std::string_view tok = trim(text.substr(0, plus));
    text = plus == std::string_view::npos ? std::string_view() : text.substr(plus + 1);
    if (tok == "omega") {
      blocks.push_back({BlockKind::Omega, 0});
    } else if (tok == "dense") {
      blocks.push_back({BlockKind::Dense, 0});
    } else if (tok.starts_with("fin:")) {
      std::string_view num = tok.substr(4);
      int k = 0;
      auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), k);
      if (ec != std::errc() || ptr != num.data() + num.size() || k < 1)
        throw ParseError("bad Fin block '" + std::string(tok) + "'");
      blocks.push_back({BlockKind::Fin, k});
    } else {
      throw ParseError("unknown chain block '" + std::string(tok) + "'");
    }
    if (plus != std::string_view::npos && text.empty()) throw ParseError("chain word ends with '+'");
  }
  return ChainFrame(std::move(blocks));
}

bool ChainFrame::has_dense() const {
  return std::any_of(blocks_.begin(), blocks_.end(), [](const Block& b) { return b.kind == BlockKind::Dense; });
}

bool ChainFrame::all_fin() const {
  return std::all_of(blocks_.begin(), blocks_.end(), [](const Block& b) { return b.kind == BlockKind::Fin; });
}

std::optional<int> ChainFrame::finite_size() const {
  if (degenerate_) return 1;
  if (!all_fin()) return std::nullopt;
  int n = 2;
  for (const Block& b : blocks_) n += b.length;
  return n;
}

std::string ChainFrame::to_string() const {
  if (degenerate_) return "one";
  if (blocks_.empty()) return "empty";
  std::string out;
  for (const Block& b : blocks_) {
    if (!out.empty()) out += "+";
    switch (b.kind) {
      case BlockKind::Fin:
        out += "fin:" + std::to_string(b.length);
        break;
      case BlockKind::Omega:
        out += "omega";
        break;
      case BlockKind::Dense:
        out += "dense";
        break;
    }
  }
  return out;
}

ChainElt normalize(const ChainFrame& C, const ChainElt& x) {
  using K = ChainElt::Kind;
  if (C.is_degenerate()) {
    if (x.kind == K::Bottom || x.kind == K::Top) return ChainElt::bottom();
    throw NormalizationError("the one-element chain has no blocks");
  }
  const auto& blocks = C.blocks();
  const int n = static_cast<int>(blocks.size());
  switch (x.kind) {
    case K::Bottom:
    case K::Top:
      return x.kind == K::Bottom ? ChainElt::bottom() : ChainElt::top();
    case K::At: {
      if (x.block < 0 || x.block >= n) throw NormalizationError("block index out of range");
      const Block& b = blocks[x.block];
      if (b.kind == BlockKind::Dense) {
        if (x.q <= 0 || x.q >= 1) throw NormalizationError("dense coordinate must lie strictly between 0 and 1");
        return ChainElt::at(x.block, x.q);
      }
      if (x.index < 0 || (b.kind == BlockKind::Fin && x.index >= b.length))
        throw NormalizationError("coordinate out of range for its block");
      return ChainElt::at(x.block, x.index);
    }
    case K::Sup: {
      if (x.block < 0 || x.block >= n) throw NormalizationError("block index out of range");
      if (blocks[x.block].kind == BlockKind::Fin) throw NormalizationError("Fin blocks have no symbolic sup");
      if (x.block == n - 1) return ChainElt::top();
      if (blocks[x.block + 1].kind != BlockKind::Dense) return ChainElt::at(x.block + 1, 0LL);
      return ChainElt::sup(x.block);
    }
  }
  throw NormalizationError("bad element kind");
}

std::string to_string(const ChainFrame& C, const ChainElt& x) {
  ChainElt y = normalize(C, x);
  switch (y.kind) {
    case ChainElt::Kind::Bottom:
      return "bot";
    case ChainElt::Kind::Top:
      return "top";
    case ChainElt::Kind::Sup:
      return "sup(b" + std::to_string(y.block) + ")";
    case ChainElt::Kind::At:
      if (C.blocks()[y.block].kind == BlockKind::Dense)
        return "b" + std::to_string(y.block) + ":" + std::to_string(y.q.numerator()) + "/" +
               std::to_string(y.q.denominator());
      return "b" + std::to_string(y.block) + ":" + std::to_string(y.index);
  }
  return "?";
}

std::strong_ordering cmp(const ChainFrame& C, const ChainElt& x0, const ChainElt& y0) {
  const ChainElt x = normalize(C, x0);
  const ChainElt y = normalize(C, y0);
  using K = ChainElt::Kind;
  auto rank = [](const ChainElt& e) { return e.kind == K::Bottom ? 0 : e.kind == K::Top ? 2 : 1; };
  if (auto c = rank(x) <=> rank(y); c != 0) return c;
  if (rank(x) != 1) return std::strong_ordering::equal;
  if (auto c = x.block <=> y.block; c != 0) return c;
  // Within a block: coordinates, then the block's sup.
  if (auto c = (x.kind == K::Sup) <=> (y.kind == K::Sup); c != 0) return c;
  if (x.kind == K::Sup) return std::strong_ordering::equal;
  if (C.blocks()[x.block].kind == BlockKind::Dense) {
    if (x.q < y.q) return std::strong_ordering::less;
    if (y.q < x.q) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  return x.index <=> y.index;
}

ChainElt chain_meet(const ChainFrame& C, const std::vector<ChainElt>& xs) {
  ChainElt acc = normalize(C, ChainElt::top());
  for (const ChainElt& x : xs)
    if (cmp(C, x, acc) < 0) acc = normalize(C, x);
  return acc;
}

ChainElt chain_join(const ChainFrame& C, const std::vector<ChainElt>& xs) {
  ChainElt acc = ChainElt::bottom();
  for (const ChainElt& x : xs)
    if (cmp(C, x, acc) > 0) acc = normalize(C, x);
  return acc;
}

bool is_limit(const ChainFrame& C, const ChainElt& x0) {
  const ChainElt x = normalize(C, x0);
  if (C.is_degenerate()) return false;
  const auto& blocks = C.blocks();
  auto infinite = [&](int i) { return blocks[i].kind != BlockKind::Fin; };
  switch (x.kind) {
    case ChainElt::Kind::Bottom:
      return false;
    case ChainElt::Kind::Top:
      return !blocks.empty() && infinite(static_cast<int>(blocks.size()) - 1);
    case ChainElt::Kind::Sup:
      return true;
    case ChainElt::Kind::At:
      if (blocks[x.block].kind == BlockKind::Dense) return true;
      // The first point of a block sits on the sup of an infinite block.
      return x.index == 0 && x.block > 0 && infinite(x.block - 1);
  }
  return false;
}

bool has_predecessor(const ChainFrame& C, const ChainElt& x) {
  return !is_limit(C, x) && normalize(C, x).kind != ChainElt::Kind::Bottom;
}

bool chain_way_below(const ChainFrame& C, const ChainElt& a, const ChainElt& b) {
  if (is_limit(C, b)) return cmp(C, a, b) < 0;
  return cmp(C, a, b) <= 0;
}

namespace {

Check fail(std::string why) { return Check{false, std::move(why)}; }

bool at_most_two(const ChainFrame& C) {
  auto n = C.finite_size();
  return n && *n <= 2;
}

Check small(const ChainFrame& C, std::string_view what) {
  if (at_most_two(C)) return {};
  return fail("chain has more than two elements, so it is not " + std::string(what));
}

Check compact(const ChainFrame& C) {
  if (is_limit(C, ChainElt::top())) return fail("top is a limit");
  return {};
}

Check algebraic(const ChainFrame& C) {
  if (C.has_dense()) return fail("dense block elements are limits of no compact elements");
  return {};
}

}  // namespace

Check chain_check(const ChainFrame& C, FramePredicate p) {
  using P = FramePredicate;
  switch (p) {
    case P::CompactFrame:
    case P::StablyCompact:
      return compact(C);
    case P::Continuous:
    case P::StablyContinuous:
    case P::Spatial:
      return {};
    case P::Algebraic:
    case P::Arithmetic:
      return algebraic(C);
    case P::Coherent: {
      Check c = algebraic(C);
      return c ? compact(C) : c;
    }
    case P::Regular:
      return small(C, "regular");
    case P::CompactRegular:
      return small(C, "compact regular");
    case P::ZeroDimensional:
      return small(C, "zero-dimensional");
    case P::Stone:
      return small(C, "Stone");
  }
  throw UnknownPredicate("unhandled chain predicate");
}

bool chain_predicate(const ChainFrame& C, FramePredicate p) { return chain_check(C, p).holds; }

bool chain_predicate(const ChainFrame& C, std::string_view name) {
  return chain_predicate(C, parse_frame_predicate(name));
}

std::vector<ChainElt> chain_elements(const ChainFrame& C) {
  if (!C.finite_size()) throw CapacityError("chain " + C.to_string() + " is infinite");
  std::vector<ChainElt> out{ChainElt::bottom()};
  if (C.is_degenerate()) return out;
  for (int i = 0; i < static_cast<int>(C.blocks().size()); ++i)
    for (int k = 0; k < C.blocks()[i].length; ++k) out.push_back(ChainElt::at(i, static_cast<long long>(k)));
  out.push_back(ChainElt::top());
  return out;
}

FinDLat materialize(const ChainFrame& C) {
  auto n = C.finite_size();
  if (!n) throw CapacityError("chain " + C.to_string() + " is infinite");
  return chain_lattice(*n);
}

const std::vector<ChainFixture>& separating_fixtures() {
  using P = FramePredicate;
  static const std::vector<ChainFixture> fixtures = {
      {"empty", {P::Stone}, {}},
      {"fin:3", {P::Coherent}, {P::Stone}},
      {"omega", {P::Arithmetic}, {P::Coherent}},
      {"dense+fin:1", {P::StablyCompact}, {P::Algebraic}},
      {"dense", {P::StablyContinuous}, {P::StablyCompact}},
  };
  return fixtures;
}

}  // namespace pw
