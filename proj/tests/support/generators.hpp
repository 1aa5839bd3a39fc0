#pragma once

#include "acs/form.hpp"
#include "acs/linalg.hpp"

#include <random>

namespace support {

/// Seeded generators for property tests.
class Gen {
public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  mpq_class rational(int range = 5) {
    mpq_class q(integer(-range, range), integer(1, 4));
    q.canonicalize();
    return q;
  }
  acs::Gaussian gaussian(int range = 5) { return acs::Gaussian(rational(range), rational(range)); }

  acs::Word word(const acs::Space& sp, int degree) {
    const auto words = sp.words_of_degree(degree);
    return words[integer(0, static_cast<int>(words.size()) - 1)];
  }

  /// Constant-coefficient form with up to `terms` terms of the given degree.
  acs::Form form(const acs::Space& sp, int degree, int terms = 3) {
    acs::Form f(sp);
    for (int t = 0; t < terms; ++t) f.add(word(sp, degree), acs::FormalCoefficient(gaussian()));
    return f;
  }

  acs::Form bidegree_form(const acs::Space& sp, int p, int q, int terms = 3) {
    acs::Form f(sp);
    const auto words = sp.words_of_bidegree(p, q);
    if (words.empty()) return f;
    for (int t = 0; t < terms; ++t)
      f.add(words[integer(0, static_cast<int>(words.size()) - 1)], acs::FormalCoefficient(gaussian()));
    return f;
  }

  /// Random Hermitian positive definite matrix U^* D U, U unipotent.
  acs::Matrix hermitian(int n) {
    acs::Matrix d(n, n), u = acs::Matrix::identity(n);
    for (int i = 0; i < n; ++i) d(i, i) = acs::Gaussian(mpq_class(integer(1, 7), integer(1, 3)));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) u(i, j) = gaussian(2);
    return u.conj_transpose() * d * u;
  }

private:
  std::mt19937_64 rng_;
};

}  // namespace support
