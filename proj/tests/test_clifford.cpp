#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "superlie/clifford.hpp"

using namespace superlie;
using namespace superlie::clifford;

namespace {

// Set-theoretic reference for sigma, element by element.
unsigned naive_sigma(SubsetIndex i_set, SubsetIndex j_set) {
  unsigned total = 0;
  for (unsigned j = 1; j <= 16; ++j) {
    if (!(j_set & (1u << (j - 1)))) continue;
    for (unsigned i = j + 1; i <= 16; ++i)
      if (i_set & (1u << (i - 1))) ++total;
  }
  return total;
}

CliffordElement gamma(std::size_t n, SubsetIndex mask) {
  return CliffordElement::monomial(n, mask);
}

const GaussScalar kTwoI = GaussScalar::pow_two_i(1);

}  // namespace

TEST_CASE("sigma: examples and the set-counting oracle") {
  CHECK(sigma(0b00, 0b11) == 0);
  CHECK(sigma(0b01, 0b11) == 0);  // no element of {1} exceeds 1 or 2
  CHECK(sigma(0b10, 0b11) == 1);  // 2 > 1
  for (unsigned n = 0; n <= 6; ++n)
    for (SubsetIndex i = 0; i < (1u << n); ++i)
      for (SubsetIndex j = 0; j < (1u << n); ++j)
        CHECK(sigma(i, j) == naive_sigma(i, j));
}

TEST_CASE("sigma symmetry identity, corrected form") {
  for (unsigned n = 0; n <= 6; ++n)
    for (SubsetIndex i = 0; i < (1u << n); ++i)
      for (SubsetIndex j = 0; j < (1u << n); ++j) {
        const unsigned lhs = sigma(i, j) + sigma(j, i);
        const unsigned rhs = unsigned(std::popcount(i)) * unsigned(std::popcount(j)) -
                             unsigned(std::popcount(i & j));
        CHECK(lhs == rhs);
      }
}

TEST_CASE("mono_product") {
  CHECK(mono_product(0b0101, 0).sign == 1);
  CHECK(mono_product(0b0101, 0).mask == 0b0101);
  CHECK(mono_product(0b01, 0b10).sign == 1);
  CHECK(mono_product(0b01, 0b10).mask == 0b11);
  CHECK(mono_product(0b10, 0b01).sign == -1);  // gamma_2 gamma_1 = -gamma_12
  CHECK(mono_product(0b10, 0b01).mask == 0b11);
}

TEST_CASE("monomial product is associative and unital") {
  const std::size_t n = 5;
  for (SubsetIndex i = 0; i < (1u << n); ++i) {
    const CliffordElement gi = gamma(n, i);
    CHECK(mul(gamma(n, 0), gi) == gi);
    CHECK(mul(gi, gamma(n, 0)) == gi);
  }
  for (SubsetIndex i = 0; i < (1u << n); ++i)
    for (SubsetIndex j = 0; j < (1u << n); ++j)
      for (SubsetIndex k = 0; k < (1u << n); ++k) {
        const auto ij = mono_product(i, j);
        const auto jk = mono_product(j, k);
        const auto left = mono_product(ij.mask, k);
        const auto right = mono_product(i, jk.mask);
        CHECK(left.mask == right.mask);
        CHECK(ij.sign * left.sign == jk.sign * right.sign);
      }
}

TEST_CASE("defining relations: gamma_i gamma_j + gamma_j gamma_i = 2 delta_ij e") {
  const std::size_t n = 6;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      const CliffordElement gi = gamma(n, 1u << i), gj = gamma(n, 1u << j);
      const CliffordElement sum = mul(gi, gj) + mul(gj, gi);
      CliffordElement expected(n);
      if (i == j) expected.add_term(0, GaussScalar(2));
      CHECK(sum == expected);
    }
}

TEST_CASE("f coefficient") {
  CHECK(f_coeff(0b01, 0b01) == 2);
  CHECK(f_coeff(0b01, 0b10) == 0);  // even intersection
  CHECK(f_coeff(0b10, 0b11) == -2);
  CHECK(f_coeff(0, 0b1011) == 0);  // anything with e is trivial
}

TEST_CASE("f antisymmetry: f(J,I) = -(-1)^{|I||J|} f(I,J)") {
  for (unsigned n = 0; n <= 6; ++n)
    for (SubsetIndex i = 0; i < (1u << n); ++i)
      for (SubsetIndex j = 0; j < (1u << n); ++j) {
        const int sgn = parity_sign(mono_parity(i), mono_parity(j));
        CHECK(f_coeff(j, i) == -sgn * f_coeff(i, j));
      }
}

TEST_CASE("commutator reproduces the C_2 relations") {
  const std::size_t n = 2;
  const CliffordElement e = gamma(n, 0), g1 = gamma(n, 0b01), g2 = gamma(n, 0b10),
                        g12 = gamma(n, 0b11);
  CHECK(commutator(g1, g1) == e * GaussScalar(2));
  CHECK(commutator(g2, g2) == e * GaussScalar(2));
  CHECK(commutator(g1, g12) == g2 * GaussScalar(2));
  CHECK(commutator(g2, g12) == g1 * GaussScalar(-2));
  CHECK(commutator(g1, g2).is_zero());
  CHECK(commutator(e, g1 + g12 * kTwoI).is_zero());
}

TEST_CASE("commutator equals xy - (-1)^{|x||y|} yx on monomials") {
  const std::size_t n = 4;
  for (SubsetIndex i = 0; i < (1u << n); ++i)
    for (SubsetIndex j = 0; j < (1u << n); ++j) {
      const CliffordElement x = gamma(n, i), y = gamma(n, j);
      const int sgn = parity_sign(mono_parity(i), mono_parity(j));
      const CliffordElement direct =
          mul(x, y) - mul(y, x) * GaussScalar(sgn);
      CHECK(commutator(x, y) == direct);
    }
}

TEST_CASE("supertrace") {
  CHECK(supertrace(gamma(2, 0b11)) == kTwoI);
  CHECK(supertrace(gamma(2, 0b01)) == GaussScalar(0));
  CHECK(supertrace(gamma(4, 0)) == GaussScalar(0));
  CHECK(supertrace(gamma(4, 0b1111)) == GaussScalar(-4));
  CHECK_THROWS_AS(supertrace(gamma(3, 0b1)), std::domain_error);
}

TEST_CASE("supertrace kills every commutator") {
  for (std::size_t n : {std::size_t(2), std::size_t(4)})
    for (SubsetIndex i = 0; i < (1u << n); ++i)
      for (SubsetIndex j = 0; j < (1u << n); ++j)
        CHECK(supertrace(commutator(gamma(n, i), gamma(n, j))) == GaussScalar(0));
}

TEST_CASE("ternary bracket examples in C_2") {
  const std::size_t n = 2;
  const CliffordElement g1 = gamma(n, 0b01), g2 = gamma(n, 0b10),
                        g12 = gamma(n, 0b11);
  CliffordElement four_i_e(n);
  four_i_e.add_term(0, GaussScalar(Rational(0), Rational(4)));
  CHECK(ternary_bracket(g1, g1, g12) == four_i_e);
  CHECK(ternary_bracket(g1, g2, g12).is_zero());
  CHECK(ternary_bracket(g1, g2, g1).is_zero());
  CHECK_THROWS_AS(ternary_bracket(gamma(3, 1), gamma(3, 1), gamma(3, 1)),
                  std::domain_error);
}

TEST_CASE("proposition table matches the ternary bracket everywhere") {
  for (std::size_t n : {std::size_t(0), std::size_t(2), std::size_t(4)}) {
    const auto table = proposition_table(n);
    auto lookup = [&](SubsetIndex i, SubsetIndex j, SubsetIndex k) {
      auto it = table.find({i, j, k});
      return it == table.end() ? CliffordElement(n) : it->second;
    };
    for (SubsetIndex i = 0; i < (1u << n); ++i)
      for (SubsetIndex j = 0; j < (1u << n); ++j)
        for (SubsetIndex k = 0; k < (1u << n); ++k)
          CHECK(lookup(i, j, k) ==
                ternary_bracket(gamma(n, i), gamma(n, j), gamma(n, k)));
  }
}

TEST_CASE("proposition table frozen values") {
  const auto table = proposition_table(2);
  // (g1, g1, g12) -> 4i e
  auto it = table.find({0b01, 0b01, 0b11});
  REQUIRE(it != table.end());
  CHECK(it->second.coeff(0) == GaussScalar(Rational(0), Rational(4)));
  // no top monomial: zero branch
  CHECK(table.find({0b01, 0b10, 0b01}) == table.end());
  // all three equal to the top monomial: zero branch
  CHECK(table.find({0b11, 0b11, 0b11}) == table.end());
  // top monomial in the middle slot flips the sign
  auto mid = table.find({0b01, 0b11, 0b01});
  REQUIRE(mid != table.end());
  CHECK(mid->second.coeff(0) == GaussScalar(Rational(0), Rational(-4)));
}

TEST_CASE("export_lie(2) holds exactly the four C_2 relations") {
  const AlgebraFile alg = export_lie(2);
  CHECK(alg.names == std::vector<std::string>{"e", "g12", "g1", "g2"});
  CHECK(alg.table.sig() == BasisSignature{2, 2});
  CHECK(alg.table.entries().size() == 4);
  auto coord = [&](const char* name) {
    return std::find(alg.names.begin(), alg.names.end(), name) - alg.names.begin();
  };
  const std::size_t e = coord("e"), g1 = coord("g1"), g2 = coord("g2"),
                    g12 = coord("g12");
  auto unit_times = [&](std::size_t idx, const GaussScalar& c) {
    Vec v = zero_vec(4);
    v[idx] = c;
    return v;
  };
  CHECK(alg.table.bracket_basis({g1, g1}) == unit_times(e, GaussScalar(2)));
  CHECK(alg.table.bracket_basis({g2, g2}) == unit_times(e, GaussScalar(2)));
  CHECK(alg.table.bracket_basis({g1, g12}) == unit_times(g2, GaussScalar(2)));
  CHECK(alg.table.bracket_basis({g2, g12}) == unit_times(g1, GaussScalar(-2)));
  CHECK(alg.table.verify_axioms().all_ok());
}

TEST_CASE("the exported table evaluates like the element-level commutator") {
  const AlgebraFile alg = export_lie(2);
  // (g1, g1) -> 2e through the generic multilinear bracket
  Vec g1_vec = zero_vec(4);
  g1_vec[2] = GaussScalar(1);
  Vec two_e = zero_vec(4);
  two_e[0] = GaussScalar(2);
  CHECK(alg.table.bracket(std::vector<Vec>{g1_vec, g1_vec}) == two_e);
}

TEST_CASE("export_lie(0) is the one-dimensional Abelian algebra") {
  const AlgebraFile alg = export_lie(0);
  CHECK(alg.table.dim() == 1);
  CHECK(alg.names == std::vector<std::string>{"e"});
  CHECK(alg.table.entries().empty());
}

TEST_CASE("export_ternary agrees with the induced bracket at n = 2") {
  const AlgebraFile lie = export_lie(2);
  const LinearFunctional str = str_functional(2);
  CHECK(lie.table.is_supertrace(str).ok);
  const BracketTable induced = lie.table.induce(str);
  const AlgebraFile ternary = export_ternary(2);
  CHECK(induced == ternary.table);
  CHECK(ternary.table.verify_axioms().all_ok());
  // the only independent relations: [g1,g1,g12] = 4i e and [g2,g2,g12] = 4i e
  CHECK(ternary.table.entries().size() == 2);
}

TEST_CASE("export_proposition equals export_ternary") {
  CHECK(export_proposition(2).table == export_ternary(2).table);
  CHECK(export_proposition(4).table == export_ternary(4).table);
}

TEST_CASE("export guards") {
  CHECK_THROWS_AS(export_lie(7), std::invalid_argument);
  CHECK_THROWS_AS(export_ternary(6), std::invalid_argument);
  CHECK_THROWS_AS(export_ternary(3), std::domain_error);
}

TEST_CASE("matrix representation: generators") {
  const Mat sigma1{{GaussScalar(0), GaussScalar(1)},
                   {GaussScalar(1), GaussScalar(0)}};
  CHECK(matrix_rep(2, 0b01) == sigma1);
  // gamma_12 = i sigma_3
  const GaussScalar im = GaussScalar::i();
  const Mat i_sigma3{{im, GaussScalar(0)}, {GaussScalar(0), -im}};
  CHECK(matrix_rep(2, 0b11) == i_sigma3);
  CHECK(matrix_rep(2, 0) == identity_mat(2));
  CHECK_THROWS_AS(matrix_rep(3, 0b1), std::domain_error);
  CHECK_THROWS_AS(matrix_rep(12, 0b1), std::invalid_argument);
}

TEST_CASE("matrix representation is a homomorphism") {
  for (std::size_t n : {std::size_t(2), std::size_t(4)})
    for (SubsetIndex i = 0; i < (1u << n); ++i)
      for (SubsetIndex j = 0; j < (1u << n); ++j) {
        const MonoProduct p = mono_product(i, j);
        Mat expected = matrix_rep(n, p.mask);
        if (p.sign < 0)
          for (Vec& row : expected)
            for (GaussScalar& c : row) c = -c;
        CHECK(mat_mul(matrix_rep(n, i), matrix_rep(n, j)) == expected);
      }
}

TEST_CASE("graded matrix trace equals the supertrace") {
  for (std::size_t n : {std::size_t(2), std::size_t(4)}) {
    const Mat grading = grading_matrix(n);
    for (SubsetIndex i = 0; i < (1u << n); ++i)
      CHECK(mat_trace(mat_mul(grading, matrix_rep(n, i))) ==
            supertrace(gamma(n, i)));
  }
  // the worked example: trace(sigma3 * i sigma3) = 2i
  CHECK(mat_trace(mat_mul(grading_matrix(2), matrix_rep(2, 0b11))) == kTwoI);
}
