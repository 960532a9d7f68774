#pragma once

// Shared generators and temp-file helpers for the test binaries. Seeds are
// fixed so failures reproduce.

#include <cstdio>
#include <filesystem>
#include <unistd.h>
#include <fstream>
#include <random>
#include <string>

#include <ultrametric/rational.hpp>

namespace testsupport {

inline ultrametric::Rational random_rational(std::mt19937_64& rng, long bound = 1'000'000) {
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, bound);
    return ultrametric::Rational(num(rng), den(rng));
}

inline ultrametric::Rational random_nonzero_rational(std::mt19937_64& rng, long bound = 1'000'000) {
    for (;;) {
        ultrametric::Rational r = random_rational(rng, bound);
        if (!r.is_zero()) return r;
    }
}

// Small rationals keep polynomial products and matrix entries readable.
inline ultrametric::Rational random_small_rational(std::mt19937_64& rng, long bound = 50) {
    return random_rational(rng, bound);
}

class TempFile {
public:
    explicit TempFile(const std::string& contents) {
        static int counter = 0;
        path_ = (std::filesystem::temp_directory_path() /
                 ("ultrametric_test_" + std::to_string(::getpid()) + "_" +
                  std::to_string(counter++) + ".json"))
                    .string();
        std::ofstream out(path_);
        out << contents;
    }

    ~TempFile() { std::remove(path_.c_str()); }

    TempFile(const TempFile&) = delete;
    TempFile& operator=(const TempFile&) = delete;

    const std::string& path() const { return path_; }

private:
    std::string path_;
};

} // namespace testsupport
