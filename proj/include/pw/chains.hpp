#pragma once

// Complete chains presented symbolically as words over three block types:
// Fin(k) (k consecutive points), Omega (order type of the naturals) and
// Dense (a completed open interval; only rational coordinates are ever
// constructed). A global bottom precedes the word and a global top follows
// it, so the empty word is the two-element chain. Every complete chain is a
// frame; the predicates below are closed forms over the block structure.

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "pw/dlat.hpp"

namespace pw {

using Rational = boost::rational<long long>;

enum class BlockKind { Fin, Omega, Dense };

struct Block {
  BlockKind kind = BlockKind::Fin;
  int length = 0;  // Fin only, ≥ 1
  bool operator==(const Block&) const = default;
};

class ChainFrame {
 public:
  // The two-element chain.
  ChainFrame() = default;
  // Normalizes: adjacent Fin blocks merge, adjacent Dense blocks merge.
  explicit ChainFrame(std::vector<Block> blocks);
  // The one-element chain (bottom = top).
  static ChainFrame degenerate();
  // "fin:3+omega+dense"; "empty" is the two-element chain, "one" the
  // one-element chain. Throws ParseError.
  static ChainFrame parse(std::string_view text);

  const std::vector<Block>& blocks() const { return blocks_; }
  bool is_degenerate() const { return degenerate_; }
  bool has_dense() const;
  bool all_fin() const;
  // Number of elements when finite.
  std::optional<int> finite_size() const;

  std::string to_string() const;
  bool operator==(const ChainFrame&) const = default;

 private:
  std::vector<Block> blocks_;
  bool degenerate_ = false;
};

struct ChainElt {
  enum class Kind { Bottom, At, Sup, Top };
  Kind kind = Kind::Bottom;
  int block = 0;
  long long index = 0;  // Fin/Omega coordinate
  Rational q{0};        // Dense coordinate, in (0, 1)

  static ChainElt bottom() { return {}; }
  static ChainElt top() { return {Kind::Top, 0, 0, Rational(0)}; }
  static ChainElt at(int block, long long index) { return {Kind::At, block, index, Rational(0)}; }
  static ChainElt at(int block, Rational q) { return {Kind::At, block, 0, q}; }
  static ChainElt sup(int block) { return {Kind::Sup, block, 0, Rational(0)}; }

  bool operator==(const ChainElt&) const = default;
};

// Validates x against C and rewrites it to its unique normal form: the sup
// of the last block is the top, the sup of a block followed by a Fin or
// Omega block is that block's first element. Throws NormalizationError.
ChainElt normalize(const ChainFrame& C, const ChainElt& x);

std::string to_string(const ChainFrame& C, const ChainElt& x);

std::strong_ordering cmp(const ChainFrame& C, const ChainElt& x, const ChainElt& y);
ChainElt chain_meet(const ChainFrame& C, const std::vector<ChainElt>& xs);
ChainElt chain_join(const ChainFrame& C, const std::vector<ChainElt>& xs);

// x is the supremum of the elements strictly below it.
bool is_limit(const ChainFrame& C, const ChainElt& x);
bool has_predecessor(const ChainFrame& C, const ChainElt& x);

bool chain_way_below(const ChainFrame& C, const ChainElt& a, const ChainElt& b);

Check chain_check(const ChainFrame& C, FramePredicate p);
bool chain_predicate(const ChainFrame& C, FramePredicate p);
bool chain_predicate(const ChainFrame& C, std::string_view name);

// For finite chains: the elements bottom to top, and the chain as a FinDLat
// whose element i is elements(C)[i].
std::vector<ChainElt> chain_elements(const ChainFrame& C);
FinDLat materialize(const ChainFrame& C);

// Small chains that separate the frame classes: each must satisfy every
// predicate in `holds` and none in `fails`.
struct ChainFixture {
  std::string word;
  std::vector<FramePredicate> holds;
  std::vector<FramePredicate> fails;
};

const std::vector<ChainFixture>& separating_fixtures();

}  // namespace pw
