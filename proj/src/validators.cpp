// Theorem validators: each one evaluates every side of a statement relating
// frame properties of L to L-space properties of X_L and topological
// properties of its spatial part, straight from the definitions.

#include <chrono>

#include "pw/duality.hpp"

namespace pw {

namespace {

constexpr std::pair<Validator, std::string_view> kValidatorNames[] = {
    {Validator::CoreChain, "coreChain"},
    {Validator::CompactCharacterization, "compactCharacterization"},
    {Validator::AlgebraicEquivalence, "algebraicEquivalence"},
    {Validator::ScottExtensions, "scottExtensions"},
    {Validator::ProperCoherent, "properCoherent"},
    {Validator::ScottStable, "scottStable"},
    {Validator::ArithmeticEquivalence, "arithmeticEquivalence"},
    {Validator::CoherentEquivalence, "coherentEquivalence"},
    {Validator::CenSubReg, "cenSubReg"},
    {Validator::StoneCollapse, "stoneCollapse"},
    {Validator::ZeroDimEquivalence, "zeroDimEquivalence"},
    {Validator::StoneEquivalence, "stoneEquivalence"},
};

std::string set_name(const Poset& P, Mask s) {
  std::string out = "{";
  bool first = true;
  for_each_bit(s, [&](int p) {
    if (!first) out += ",";
    out += P.label(p);
    first = false;
  });
  return out + "}";
}

std::string bool_name(bool b) { return b ? "true" : "false"; }

std::string image_name(const std::vector<int>& image) {
  std::string out = "[";
  for (std::size_t i = 0; i < image.size(); ++i) out += (i ? "," : "") + std::to_string(image[i]);
  return out + "]";
}

struct Context {
  const FinDLat& L;
  StoneMapRecord rec;
  ValidationReport& report;

  const FinPriestley& X() const { return rec.space; }
  const Poset& points() const { return rec.space.points(); }

  void fail(std::map<std::string, std::string> witness) {
    if (!report.pass) return;
    report.pass = false;
    report.witness = std::move(witness);
  }
  std::string upset(Mask U) const { return set_name(points(), U); }
};

// Records the sides of an equivalence and fails unless they all agree.
void equivalence(Context& c, std::vector<std::pair<std::string, bool>> sides) {
  bool agree = true;
  for (const auto& [name, value] : sides) {
    c.report.sides[name] = value;
    agree = agree && value == sides.front().second;
  }
  if (!agree) {
    std::map<std::string, std::string> w{{"failure", "sides disagree"}};
    for (const auto& [name, value] : sides) w[name] = bool_name(value);
    c.fail(std::move(w));
  }
}

void core_chain(Context& c) {
  const FinPriestley& X = c.X();
  for (Mask U : X.clopen_upsets()) {
    const Mask co = core(X, U), k = kernel(X, U);
    if (!subset_of(co, k)) c.fail({{"upset", c.upset(U)}, {"failure", "core U is not inside ker U"}});
    if (!subset_of(k, U)) c.fail({{"upset", c.upset(U)}, {"failure", "ker U is not inside U"}});
    if (is_scott_upset(X, U) != (co == U))
      c.fail({{"upset", c.upset(U)}, {"failure", "Scott upset status disagrees with core U = U"}});
    for (Mask V : X.clopen_upsets())
      if (subset_of(U, V) && !subset_of(co, core(X, V)))
        c.fail({{"upset", c.upset(U)}, {"other", c.upset(V)}, {"failure", "core is not monotone"}});
  }
}

void compact_characterization(Context& c) {
  const FinDLat& L = c.L;
  const FinPriestley& X = c.X();
  for (Elem a = 0; a < L.size(); ++a) {
    const Mask phi = c.rec.phi[a];
    const bool compact = way_below_oracle(L, a, a);
    const bool ker_fixed = kernel(X, phi) == phi;
    const bool scott = is_scott_upset(X, phi);
    if (compact != ker_fixed || compact != scott)
      c.fail({{"element", L.name(a)},
              {"compact", bool_name(compact)},
              {"kerFixed", bool_name(ker_fixed)},
              {"scottUpset", bool_name(scott)}});
  }
  equivalence(c, {{"compactFrame", frame_predicate(L, FramePredicate::CompactFrame)},
                  {"lCompact", lspace_predicate(X, LSpacePredicate::LCompact)}});
}

void algebraic_equivalence(Context& c) {
  const FinDLat& L = c.L;
  const FinPriestley& X = c.X();
  const Mask K = compact_elements(L);
  for (Elem a = 0; a < L.size(); ++a) {
    const Mask below = K & L.order().down(a);
    const bool generated = L.join_all(below) == a;
    const bool dense = dense_in(X, core(X, c.rec.phi[a]), c.rec.phi[a]);
    if (generated != dense)
      c.fail({{"element", L.name(a)}, {"joinOfCompacts", bool_name(generated)}, {"coreDense", bool_name(dense)}});
    if (!phi_join_law(c.rec, below))
      c.fail({{"element", L.name(a)}, {"failure", "phi does not turn the join of compacts below into a closure"}});
  }
  equivalence(c, {{"algebraic", frame_predicate(L, FramePredicate::Algebraic)},
                  {"algebraicL", lspace_predicate(X, LSpacePredicate::AlgebraicL)}});
}

void scott_extensions(Context& c) {
  const FinPriestley& X = c.X();
  const bool continuous = lspace_predicate(X, LSpacePredicate::ContinuousL);
  c.report.sides["continuousL"] = continuous;
  if (!continuous) return;
  const Mask Y = spatial_part(X);
  const auto& scott_clopen = X.clopen_scott_upsets();
  std::vector<Mask> scott;
  for (Mask F : X.closed_upsets())
    if (is_scott_upset(X, F)) scott.push_back(F);
  for (Mask U : X.clopen_upsets()) {
    const Mask k = kernel(X, U), co = core(X, U);
    const bool s1 = k == co;
    const bool s2 = dense_in(X, co, U);
    bool s3 = true;
    for_each_bit(U & Y, [&](int y) {
      bool found = false;
      for (Mask V : scott_clopen) found = found || (has(V, y) && subset_of(V, U));
      s3 = s3 && found;
    });
    bool s4 = true;
    for (Mask F : scott) {
      if (!subset_of(F, k)) continue;
      bool found = false;
      for (Mask V : scott_clopen) found = found || (subset_of(F, V) && subset_of(V, U));
      s4 = s4 && found;
    }
    if (s1 != s2 || s1 != s3 || s1 != s4)
      c.fail({{"upset", c.upset(U)},
              {"kerEqualsCore", bool_name(s1)},
              {"coreDense", bool_name(s2)},
              {"spatialPointsCovered", bool_name(s3)},
              {"scottUpsetsExtend", bool_name(s4)}});
  }
}

struct Partner {
  FinDLat lattice;
  StoneMapRecord rec;
  bool algebraic;
};

void proper_coherent(Context& c, std::span<const FinDLat> partners) {
  const FinDLat& L = c.L;
  const int joins = popcount(join_irreducibles(L));
  Partner self{L, c.rec, lspace_predicate(c.X(), LSpacePredicate::AlgebraicL)};
  std::vector<Partner> others;
  for (const FinDLat& M : partners) {
    if (M.same_as(L) || popcount(join_irreducibles(M)) > joins) continue;
    StoneMapRecord rec = priestley_space_of(M);
    const bool alg = lspace_predicate(rec.space, LSpacePredicate::AlgebraicL);
    others.push_back({M, std::move(rec), alg});
  }
  long long homs = 0;
  auto check = [&](const Partner& from, const Partner& to) {
    for (const LatticeHom& h : enumerate_homs(from.lattice, to.lattice, HomPredicate::FrameHom)) {
      ++homs;
      const bool coherent_hom = hom_predicate(h, HomPredicate::CoherentHom);
      const bool proper_hom = hom_predicate(h, HomPredicate::ProperHom);
      // f : X_to → X_from.
      const SpaceMap f = dualize_hom(h, to.rec, from.rec);
      const bool l_morphism = map_predicate(f, MapPredicate::LMorphism);
      const bool proper = map_predicate(f, MapPredicate::ProperL);
      const bool coherent = map_predicate(f, MapPredicate::CoherentL);
      const bool x1_alg = to.algebraic, x2_alg = from.algebraic;
      std::string failure;
      if (!l_morphism) failure = "dual map is not an L-morphism";
      else if (coherent_hom != proper_hom) failure = "coherent and proper disagree on the lattice side";
      else if (proper && x1_alg && !coherent) failure = "proper map out of an algebraic space is not coherent";
      else if (coherent && x2_alg && !proper) failure = "coherent map into an algebraic space is not proper";
      else if (x1_alg && x2_alg && proper != coherent) failure = "proper and coherent disagree";
      if (!failure.empty())
        c.fail({{"hom", image_name(h.image())},
                {"source", std::to_string(from.lattice.size()) + " elements"},
                {"target", std::to_string(to.lattice.size()) + " elements"},
                {"failure", failure}});
    }
  };
  check(self, self);
  for (const Partner& M : others) {
    check(self, M);
    check(M, self);
  }
  c.report.sides["homsChecked"] = homs > 0;
}

void scott_stable(Context& c) {
  const FinPriestley& X = c.X();
  const auto& scott = X.clopen_scott_upsets();
  bool closed = true;
  std::map<std::string, std::string> witness;
  for (Mask U : scott)
    for (Mask V : scott)
      if (closed && !(X.is_clopen(U & V) && is_scott_upset(X, U & V))) {
        closed = false;
        witness = {{"upset", c.upset(U)}, {"other", c.upset(V)}};
      }
  const bool algebraic = lspace_predicate(X, LSpacePredicate::AlgebraicL);
  c.report.sides["algebraicL"] = algebraic;
  if (!algebraic) return;
  const bool stable = lspace_predicate(X, LSpacePredicate::KernelStable);
  const bool arithmetic = lspace_predicate(X, LSpacePredicate::ArithmeticL);
  c.report.sides["kernelStable"] = stable;
  if (arithmetic != (algebraic && stable)) c.fail({{"failure", "arithmeticL is not algebraicL with kernelStable"}});
  equivalence(c, {{"arithmeticL", arithmetic}, {"scottClosedUnderIntersection", closed}});
  if (!c.report.pass && !witness.empty()) c.report.witness.insert(witness.begin(), witness.end());
}

// Shared shape of the three-way statements: a lattice-side predicate, an
// L-space predicate and a point-space predicate under a hypothesis on L.
void three_way(Context& c, std::string hypothesis_name, bool hypothesis, FramePredicate frame, LSpacePredicate space,
               PointSpacePredicate point, bool point_needs_spatial) {
  if (!hypothesis_name.empty()) c.report.sides[hypothesis_name] = hypothesis;
  if (!hypothesis) return;
  std::vector<std::pair<std::string, bool>> sides{
      {std::string(to_string(frame)), frame_predicate(c.L, frame)},
      {std::string(to_string(space)), lspace_predicate(c.X(), space)},
  };
  const bool spatial = !point_needs_spatial || frame_predicate(c.L, FramePredicate::Spatial);
  if (point_needs_spatial) c.report.sides["spatial"] = spatial;
  if (spatial) sides.push_back({std::string(to_string(point)), point_space_predicate(point_space(c.X()), point)});
  equivalence(c, std::move(sides));
}

void cen_sub_reg(Context& c) {
  const FinPriestley& X = c.X();
  for (Mask U : X.clopen_upsets())
    if (!subset_of(center(X, U), regular_part(X, U)))
      c.fail({{"upset", c.upset(U)}, {"failure", "cen U is not inside reg U"}});
  const bool zero_dim = lspace_predicate(X, LSpacePredicate::ZeroDimL);
  const bool regular = lspace_predicate(X, LSpacePredicate::RegularL);
  const bool stone = lspace_predicate(X, LSpacePredicate::StoneL);
  const bool compact_regular = lspace_predicate(X, LSpacePredicate::CompactRegularL);
  c.report.sides["zeroDimL"] = zero_dim;
  c.report.sides["regularL"] = regular;
  c.report.sides["stoneL"] = stone;
  c.report.sides["compactRegularL"] = compact_regular;
  if (zero_dim && !regular) c.fail({{"failure", "zero-dimensional L-space is not regular"}});
  if (stone && !compact_regular) c.fail({{"failure", "Stone L-space is not compact regular"}});
}

void stone_collapse(Context& c) {
  const FinPriestley& X = c.X();
  const bool stone = lspace_predicate(X, LSpacePredicate::StoneL);
  c.report.sides["stoneL"] = stone;
  if (!stone) return;
  if (X.clopen_scott_upsets() != X.clopen_bisets())
    c.fail({{"failure", "clopen Scott upsets differ from clopen bisets"}});
  for (Mask U : X.clopen_upsets())
    if (center(X, U) != core(X, U)) c.fail({{"upset", c.upset(U)}, {"failure", "cen U differs from core U"}});
}

}  // namespace

Validator parse_validator(std::string_view name) {
  for (const auto& [v, n] : kValidatorNames)
    if (n == name) return v;
  throw UnknownPredicate("unknown validator '" + std::string(name) + "'");
}

std::string_view to_string(Validator v) {
  for (const auto& [w, n] : kValidatorNames)
    if (w == v) return n;
  return "?";
}

const std::vector<Validator>& all_validators() {
  static const std::vector<Validator> all = [] {
    std::vector<Validator> v;
    for (const auto& e : kValidatorNames) v.push_back(e.first);
    return v;
  }();
  return all;
}

ValidationReport validate(Validator v, const FinDLat& L, std::string lattice_id, std::span<const FinDLat> partners) {
  const auto start = std::chrono::steady_clock::now();
  ValidationReport report;
  report.lattice = std::move(lattice_id);
  report.validator = v;
  Context c{L, priestley_space_of(L), report};
  switch (v) {
    case Validator::CoreChain:
      core_chain(c);
      break;
    case Validator::CompactCharacterization:
      compact_characterization(c);
      break;
    case Validator::AlgebraicEquivalence:
      algebraic_equivalence(c);
      break;
    case Validator::ScottExtensions:
      scott_extensions(c);
      break;
    case Validator::ProperCoherent:
      proper_coherent(c, partners);
      break;
    case Validator::ScottStable:
      scott_stable(c);
      break;
    case Validator::ArithmeticEquivalence:
      three_way(c, "algebraic", frame_predicate(L, FramePredicate::Algebraic), FramePredicate::Arithmetic,
                LSpacePredicate::ArithmeticL, PointSpacePredicate::StablyCompactlyBased, false);
      break;
    case Validator::CoherentEquivalence:
      three_way(c, "algebraic", frame_predicate(L, FramePredicate::Algebraic), FramePredicate::Coherent,
                LSpacePredicate::CoherentL, PointSpacePredicate::Spectral, false);
      break;
    case Validator::CenSubReg:
      cen_sub_reg(c);
      break;
    case Validator::StoneCollapse:
      stone_collapse(c);
      break;
    case Validator::ZeroDimEquivalence:
      three_way(c, "", true, FramePredicate::ZeroDimensional, LSpacePredicate::ZeroDimL,
                PointSpacePredicate::ZeroDimensional, true);
      break;
    case Validator::StoneEquivalence:
      three_way(c, "", true, FramePredicate::Stone, LSpacePredicate::StoneL, PointSpacePredicate::StoneSpace,
                true);
      break;
  }
  report.micros =
      std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace pw
