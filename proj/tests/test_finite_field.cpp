#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "unital/finite_field.hpp"

using namespace unital;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvariantViolation;
}

}  // namespace

TEST(FiniteField, CanonicalModuli) {
  EXPECT_EQ(make_field(2, 2).spec().modulus, (std::vector<unsigned>{1, 1, 1}));
  EXPECT_EQ(make_field(3, 2).spec().modulus, (std::vector<unsigned>{1, 0, 1}));
  EXPECT_EQ(make_field(2, 1).spec().modulus, (std::vector<unsigned>{0, 1}));
  EXPECT_EQ(make_field(2, 4).spec().modulus, (std::vector<unsigned>{1, 1, 0, 0, 1}));
}

TEST(FiniteField, Gf9ModulusIsFirstQuadraticWithoutRoots) {
  // Every monic quadratic x^2 + b x + c over GF(3), in the order b major.
  std::vector<std::vector<unsigned>> irreducible;
  for (unsigned b = 0; b < 3; ++b) {
    for (unsigned c = 0; c < 3; ++c) {
      bool root = false;
      for (unsigned x = 0; x < 3; ++x) root = root || (x * x + b * x + c) % 3 == 0;
      if (!root) irreducible.push_back({c, b, 1});
    }
  }
  ASSERT_EQ(irreducible.size(), 3u);
  EXPECT_EQ(make_field(3, 2).spec().modulus, irreducible.front());
}

TEST(FiniteField, InvalidParameters) {
  EXPECT_EQ(code_of([] { make_field(4, 1); }), ErrorCode::NotPrime);
  EXPECT_EQ(code_of([] { make_field(1, 2); }), ErrorCode::NotPrime);
  EXPECT_EQ(code_of([] { make_field(2, 17); }), ErrorCode::TooLarge);
  EXPECT_EQ(code_of([] { make_field(3, 0); }), ErrorCode::InvalidArgument);
  EXPECT_NO_THROW(make_field(2, 16));
}

TEST(FiniteField, OmegaSquaredInGf4) {
  const auto F = make_field(2, 2);
  const auto w = F.x();
  EXPECT_EQ(F.mul(w, w), F.add(w, F.one()));
  EXPECT_EQ(F.conjugate(w, 2), F.mul(w, w));
  EXPECT_FALSE(F.is_in_subfield(w, 2));
}

TEST(FiniteField, AxiomsHoldExhaustivelyForSmallFields) {
  for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {3, 2}, {2, 3}, {5, 2}, {2, 4}, {7, 2}}) {
    const auto F = make_field(p, k);
    const auto E = F.elements();
    ASSERT_EQ(E.size(), F.size());
    for (auto a : E) {
      ASSERT_EQ(F.add(a, F.neg(a)), F.zero());
      ASSERT_EQ(F.mul(a, F.one()), a);
      if (a != F.zero()) ASSERT_EQ(F.mul(a, F.inv(a)), F.one());
      for (auto b : E) {
        ASSERT_EQ(F.add(a, b), F.add(b, a));
        ASSERT_EQ(F.mul(a, b), F.mul(b, a));
        for (auto c : E) {
          ASSERT_EQ(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)));
          ASSERT_EQ(F.add(F.add(a, b), c), F.add(a, F.add(b, c)));
          ASSERT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
        }
      }
    }
  }
}

TEST(FiniteField, DivisionByZero) {
  const auto F = make_field(3, 2);
  EXPECT_EQ(code_of([&] { F.inv(F.zero()); }), ErrorCode::DivisionByZero);
  EXPECT_EQ(code_of([&] { F.div(F.one(), F.zero()); }), ErrorCode::DivisionByZero);
}

TEST(FiniteField, MultiplicativeOrder) {
  const auto F = make_field(2, 4);
  for (auto g : F.elements()) {
    if (g == F.zero()) continue;
    ASSERT_EQ(F.pow(g, 15), F.one());
    ASSERT_EQ(F.mul(F.pow(g, -1), g), F.one());
  }
  // The primitive element has order exactly 15.
  std::set<std::uint32_t> powers;
  for (int e = 0; e < 15; ++e) powers.insert(F.pow(F.primitive_element(), e).value);
  EXPECT_EQ(powers.size(), 15u);
}

TEST(FiniteField, ConjugationIsAnInvolutiveAutomorphism) {
  for (auto [p, k, q] : std::vector<std::tuple<unsigned, unsigned, unsigned>>{{2, 2, 2}, {3, 2, 3}, {2, 4, 4}, {5, 2, 5}}) {
    const auto F = make_field(p, k);
    std::size_t fixed = 0;
    for (auto a : F.elements()) {
      ASSERT_EQ(F.conjugate(F.conjugate(a, q), q), a);
      fixed += F.is_in_subfield(a, q);
      for (auto b : F.elements()) {
        ASSERT_EQ(F.conjugate(F.mul(a, b), q), F.mul(F.conjugate(a, q), F.conjugate(b, q)));
        ASSERT_EQ(F.conjugate(F.add(a, b), q), F.add(F.conjugate(a, q), F.conjugate(b, q)));
      }
    }
    EXPECT_EQ(fixed, q);
  }
}

TEST(FiniteField, SubfieldMembership) {
  const auto F16 = make_field(2, 4);
  EXPECT_TRUE(F16.is_in_subfield(F16.zero(), 4));
  const auto F25 = make_field(5, 2);
  std::size_t count = 0;
  for (auto a : F25.elements()) count += F25.is_in_subfield(a, 5);
  EXPECT_EQ(count, 5u);
  EXPECT_EQ(code_of([&] { F25.conjugate(F25.one(), 3); }), ErrorCode::InvalidArgument);
}

TEST(FiniteField, RootsOfUnity) {
  const auto F4 = make_field(2, 2);
  auto r = F4.roots_of_unity(3);
  std::set<FieldElement> got(r.begin(), r.end());
  EXPECT_EQ(got, (std::set<FieldElement>{F4.one(), F4.x(), F4.add(F4.x(), F4.one())}));
  EXPECT_EQ(F4.roots_of_unity(1), std::vector<FieldElement>{F4.one()});

  const auto F9 = make_field(3, 2);
  std::set<FieldElement> brute;
  for (auto a : F9.elements()) {
    if (F9.mul(F9.mul(a, a), F9.mul(a, a)) == F9.one()) brute.insert(a);
  }
  const auto r4 = F9.roots_of_unity(4);
  EXPECT_EQ(std::set<FieldElement>(r4.begin(), r4.end()), brute);
  EXPECT_EQ(r4.size(), 4u);
  for (auto a : r4)
    for (auto b : r4) EXPECT_TRUE(brute.contains(F9.mul(a, b)));

  EXPECT_EQ(code_of([&] { F9.roots_of_unity(5); }), ErrorCode::DoesNotDivide);
}

TEST(FiniteField, CoefficientRoundTripAndPrinting) {
  const auto F = make_field(3, 2);
  for (auto a : F.elements()) {
    const auto c = F.coefficients(a);
    ASSERT_EQ(F.from_coefficients(c), a);
  }
  EXPECT_EQ(F.to_string(F.zero()), "0");
  EXPECT_EQ(F.to_string(F.x()), "x");
  EXPECT_EQ(F.to_string(F.add(F.x(), F.one())), "x+1");
}
