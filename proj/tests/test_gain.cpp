#include <doctest.h>

#include "gainline/error.hpp"
#include "gainline/gain.hpp"
#include "support.hpp"

using namespace gainline;
using namespace testsupport;

namespace {
SwitchingFunction pointwise(const SwitchingFunction& f, const SwitchingFunction& g, const FiniteGroup& grp) {
  SwitchingFunction h;
  for (std::size_t i = 0; i < f.values.size(); ++i) h.values.push_back(grp.multiply(f.values[i], g.values[i]));
  return h;
}
}  // namespace

TEST_CASE("gains on the paw") {
  auto q = FiniteGroup::quaternion8();
  SimpleGraph paw(4, {{0, 1}, {1, 2}, {2, 3}, {1, 3}});
  auto e = [&](const char* s) { return q->parse(s); };
  GainFunction psi(paw, q, {e("-i"), e("-j"), e("-k"), e("-i")});
  CHECK(psi(0, 1) == e("-i"));
  CHECK(psi(1, 0) == e("i"));
  CHECK(psi(3, 2) == e("k"));
  CHECK(psi.along(3, 3) == e("i"));
  CHECK_THROWS_AS(psi(0, 2), InputError);
  CHECK(walk_gain(psi, {1, 2, 3, 1}) == q->product({e("-j"), e("-k"), e("i")}));
  CHECK_THROWS_AS(walk_gain(psi, {0, 2}), InputError);
  auto a = gain_adjacency(psi);
  CHECK(a == a.star());
  CHECK(a(1, 3) == AlgebraElement(q, e("-i")));
  CHECK(a(0, 2).is_zero());
  CHECK_THROWS_AS(GainFunction(paw, q, {e("1")}), StructuralError);
  CHECK_THROWS_AS(GainFunction::constant(paw, q, e("i")), ValidationError);
  CHECK(GainFunction::constant(paw, q, e("-1")).scaled(e("-1")) == GainFunction::constant(paw, q, kIdentity));
}

TEST_CASE("s-Laplacian") {
  auto q = FiniteGroup::quaternion8();
  SimpleGraph tri(3, {{0, 1}, {1, 2}, {0, 2}});
  GainFunction psi(tri, q, {q->parse("i"), q->parse("j"), q->parse("k")});
  auto s = q->central_weak_involution(q->parse("-1"));
  auto l = s_laplacian(psi, s);
  CHECK(l(0, 0) == 2.0 * AlgebraElement(q, kIdentity));
  CHECK(l(0, 1) == AlgebraElement(q, q->parse("-i")));
  CHECK(l(2, 1) == AlgebraElement(q, q->parse("j")));
  auto id = q->identity_involution();
  CHECK(s_laplacian(psi, id)(1, 2) == AlgebraElement(q, q->parse("j")));
}

TEST_CASE("balance") {
  auto sign = FiniteGroup::sign();
  SimpleGraph tri(3, {{0, 1}, {1, 2}, {0, 2}});
  auto m = sign->parse("-1");
  CHECK_FALSE(is_balanced(GainFunction(tri, sign, {m, kIdentity, kIdentity})).balanced);
  auto r = is_balanced(GainFunction(tri, sign, {m, m, kIdentity}));
  REQUIRE(r.balanced);
  REQUIRE(r.witness.has_value());
  CHECK(switch_gain(GainFunction(tri, sign, {m, m, kIdentity}), *r.witness) ==
        GainFunction::constant(tri, sign, kIdentity));
  CHECK(is_antibalanced(GainFunction(tri, sign, {m, kIdentity, kIdentity})) == true);
  CHECK(is_antibalanced(GainFunction(tri, sign, {m, m, kIdentity})) == false);
  auto d4 = FiniteGroup::dihedral(4);
  CHECK_FALSE(is_antibalanced(GainFunction::constant(tri, d4, kIdentity)).has_value());
}

TEST_CASE("property: trees are balanced, switching laws") {
  Rng rng(21);
  for (const auto& g : test_groups()) {
    for (int t = 0; t < 30; ++t) {
      auto tree = random_graph(rng, uniform(rng, 2, 8), 0.0);
      auto psi = random_gain(rng, tree, g);
      auto r = is_balanced(psi);
      CHECK(r.balanced);
      REQUIRE(r.witness);
      CHECK(switch_gain(psi, *r.witness) == GainFunction::constant(tree, g, kIdentity));

      auto graph = random_graph(rng, 2, 8, 0.4);
      auto phi = random_gain(rng, graph, g);
      auto f = random_switching(rng, graph.vertex_count(), *g);
      auto h = random_switching(rng, graph.vertex_count(), *g);
      CHECK(switch_gain(switch_gain(phi, f), h) == switch_gain(phi, pointwise(f, h, *g)));
      // Switching conjugates the adjacency matrix by the diagonal of f.
      auto df = CGMatrix::diagonal(g, f.values);
      CHECK(gain_adjacency(switch_gain(phi, f)) == df.star() * gain_adjacency(phi) * df);
      auto w = switching_equivalent(phi, switch_gain(phi, f));
      REQUIRE(w);
      CHECK(switch_gain(phi, *w) == switch_gain(phi, f));
      // Balanced gains: switches of the constant identity.
      CHECK(is_balanced(switch_gain(GainFunction::constant(graph, g, kIdentity), f)).balanced);
      // Closed walks in a balanced gain graph have trivial gain.
      auto bal = switch_gain(GainFunction::constant(graph, g, kIdentity), f);
      const auto& e0 = graph.edge(0);
      CHECK(walk_gain(bal, {e0.u, e0.v, e0.u}) == kIdentity);
    }
  }
}

TEST_CASE("property: switching equivalence agrees with brute force") {
  Rng rng(8);
  for (auto g : {FiniteGroup::sign(), FiniteGroup::cyclic(3), FiniteGroup::dihedral(3)}) {
    for (int t = 0; t < 25; ++t) {
      auto graph = random_graph(rng, 2, 4, 0.6);
      auto a = random_gain(rng, graph, g), b = random_gain(rng, graph, g);
      bool brute = false;
      for (const auto& d : all_diagonals(graph.vertex_count(), *g))
        if (switch_gain(a, SwitchingFunction{d.diag}) == b) brute = true;
      auto w = switching_equivalent(a, b);
      CHECK(w.has_value() == brute);
      if (w) CHECK(switch_gain(a, *w) == b);
    }
  }
}

TEST_CASE("mismatched operands") {
  SimpleGraph k2(2, {{0, 1}});
  SimpleGraph p3(3, {{0, 1}, {1, 2}});
  auto q = FiniteGroup::quaternion8();
  CHECK_THROWS_AS(switching_equivalent(GainFunction::constant(k2, q, kIdentity),
                                       GainFunction::constant(p3, q, kIdentity)),
                  StructuralError);
  CHECK_THROWS_AS(switching_equivalent(GainFunction::constant(k2, q, kIdentity),
                                       GainFunction::constant(k2, FiniteGroup::dihedral(4), kIdentity)),
                  StructuralError);
  CHECK_THROWS_AS(switch_gain(GainFunction::constant(k2, q, kIdentity), SwitchingFunction{{kIdentity}}),
                  StructuralError);
}

TEST_CASE("small documented cases") {
  auto q = FiniteGroup::quaternion8();
  auto e = [&](const char* s) { return q->parse(s); };
  SimpleGraph k2(2, {{0, 1}});
  // Conjugation by j sends i to -i.
  GainFunction gi(k2, q, {e("i")});
  CHECK(switch_gain(gi, SwitchingFunction{{e("j"), e("j")}}).edge_gain(0) == e("-i"));
  CHECK(switch_gain(gi, SwitchingFunction{{kIdentity, kIdentity}}) == gi);
  auto z4 = FiniteGroup::cyclic(4);
  GainFunction g4(k2, z4, {z4->parse("1")});
  CHECK(switch_gain(g4, SwitchingFunction{{z4->parse("3"), z4->parse("3")}}) == g4);
  CHECK(walk_gain(gi, {0, 1}) == e("i"));
  CHECK(walk_gain(gi, {0, 1, 0}) == kIdentity);
  auto ka = gain_adjacency(GainFunction::constant(k2, q, kIdentity));
  CHECK(ka(0, 1) == AlgebraElement(q, kIdentity));
  CHECK(ka(0, 0).is_zero());
  CHECK(s_laplacian(gi, q->central_weak_involution(e("-1")))(0, 0) == AlgebraElement(q, kIdentity));

  SimpleGraph paw(4, {{0, 1}, {1, 2}, {2, 3}, {1, 3}});
  GainFunction psi(paw, q, {e("-i"), e("-j"), e("-k"), e("-i")});
  auto lap = s_laplacian(psi, q->central_weak_involution(e("-1")));
  const double degs[] = {1, 3, 2, 2};
  for (Vertex v = 0; v < 4; ++v) CHECK(lap(v, v) == degs[v] * AlgebraElement(q, kIdentity));
  CHECK(lap(0, 1) == AlgebraElement(q, e("i")));

  // Constant -1 on a triangle: gain (-1)^3 != 1, so unbalanced and not equivalent to 1.
  auto sign = FiniteGroup::sign();
  SimpleGraph k3(3, {{0, 1}, {1, 2}, {0, 2}});
  auto minus = GainFunction::constant(k3, sign, sign->parse("-1"));
  CHECK_FALSE(is_balanced(minus).balanced);
  CHECK_FALSE(switching_equivalent(GainFunction::constant(k3, sign, kIdentity), minus).has_value());

  // Replacing one paw gain: compare against exhaustive search over all |G|^n switchings.
  GainFunction other(paw, q, {e("-i"), e("-j"), e("-k"), e("j")});
  bool brute = false;
  for (const auto& d : testsupport::all_diagonals(4, *q))
    brute = brute || switch_gain(psi, SwitchingFunction{d.diag}) == other;
  CHECK_FALSE(brute);
  CHECK_FALSE(switching_equivalent(psi, other).has_value());
}
