#pragma once

#include <cmath>
#include <filesystem>
#include <unistd.h>
#include <string>

#include "oracles.hpp"
#include "qubitinv/algebra.hpp"
#include "qubitinv/bloch.hpp"
#include "qubitinv/error.hpp"
#include "qubitinv/random.hpp"

#define EXPECT_ERROR_CODE(stmt, expected)                        \
  do {                                                            \
    try {                                                         \
      stmt;                                                       \
      ADD_FAILURE() << "no exception from " #stmt;                \
    } catch (const qubitinv::Error& e) {                          \
      EXPECT_EQ(e.code(), expected) << e.what();                  \
    }                                                             \
  } while (0)

namespace testing_support {

inline oracle::V3 to_eigen(const qubitinv::Vec3C& v) { return {v[0], v[1], v[2]}; }

inline oracle::M3 to_eigen(const qubitinv::Mat3C& m) {
  oracle::M3 r;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) r(Eigen::Index(a), Eigen::Index(b)) = m(a, b);
  return r;
}

inline qubitinv::Vec3C random_vec(qubitinv::Rng& rng) {
  qubitinv::Vec3C v;
  for (std::size_t k = 0; k < 3; ++k) v[k] = qubitinv::uniform_square(rng);
  return v;
}

inline double diff(const oracle::V3& x, const oracle::V3& y) { return (x - y).cwiseAbs().maxCoeff(); }
inline double diff(const oracle::M3& x, const oracle::M3& y) { return (x - y).cwiseAbs().maxCoeff(); }

inline double rel(std::complex<double> x, std::complex<double> y) {
  return std::abs(x - y) / (1.0 + std::abs(x));
}

// Unique path under the system temp directory.
inline std::string temp_path(const std::string& name) {
  static int counter = 0;
  return (std::filesystem::temp_directory_path() /
          ("qubitinv_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + "_" +
           name))
      .string();
}

}  // namespace testing_support
