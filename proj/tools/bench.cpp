// Differential benchmark of the dense rational kernels: the OpenMP entry
// points against the serial reference flavour, with an equality check so a
// parallelization bug cannot hide behind a good time.

#include "sia/matrix.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <string>

using namespace sia;

namespace {

Mat random_mat(std::size_t rows, std::size_t cols, std::mt19937& rng) {
    std::uniform_int_distribution<int> entry(-9, 9);
    Mat m = Mat::zero(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = Rat(entry(rng));
    return m;
}

double time_ms(const std::function<void()>& body) {
    const auto start = std::chrono::steady_clock::now();
    body();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

bool report(const std::string& label, double parallelMs, double serialMs,
            bool equal) {
    std::cout << std::left << std::setw(22) << label << std::right << std::fixed
              << std::setprecision(1) << std::setw(10) << parallelMs << " ms"
              << std::setw(10) << serialMs << " ms" << std::setprecision(2)
              << std::setw(9) << (parallelMs > 0 ? serialMs / parallelMs : 0.0)
              << "x  " << (equal ? "results equal" : "RESULTS DIFFER") << "\n";
    return equal;
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t scale = 1;
    if (argc > 1) {
        const long v = std::strtol(argv[1], nullptr, 10);
        if (v < 1 || v > 8) {
            std::cerr << "usage: sia-bench [scale 1..8]\n";
            return 2;
        }
        scale = static_cast<std::size_t>(v);
    }
    std::mt19937 rng(20240517);

    std::cout << std::left << std::setw(22) << "kernel" << std::right
              << std::setw(13) << "openmp" << std::setw(13) << "serial"
              << std::setw(10) << "speedup" << "\n";
    bool ok = true;

    {
        const std::size_t n = 72 * scale;
        const Mat a = random_mat(n, n, rng);
        const Mat b = random_mat(n, n, rng);
        Mat p = Mat::zero(0, 0), s = Mat::zero(0, 0);
        const double pm = time_ms([&] { p = kernels::mul(a, b); });
        const double sm = time_ms([&] { s = kernels::mul_serial(a, b); });
        ok &= report("mul " + std::to_string(n) + "x" + std::to_string(n), pm, sm,
                     p == s);
    }
    {
        const std::size_t n = 20 * scale;
        const Mat a = random_mat(n, n, rng);
        const Mat b = random_mat(n, n, rng);
        Mat p = Mat::zero(0, 0), s = Mat::zero(0, 0);
        const double pm = time_ms([&] { p = kernels::kron(a, b); });
        const double sm = time_ms([&] { s = kernels::kron_serial(a, b); });
        ok &= report("kron " + std::to_string(n) + "(x)" + std::to_string(n), pm,
                     sm, p == s);
    }
    {
        // One elimination sweep per pivot position, over a shared input.
        const std::size_t n = 96 * scale;
        const Mat base = random_mat(n, n, rng);
        Mat p = base, s = base;
        double pm = 0, sm = 0;
        for (std::size_t k = 0; k < n; ++k) {
            p = base;
            if (p.at(k, k).is_zero()) continue;
            const Rat inv = Rat(1) / p.at(k, k);
            for (std::size_t c = 0; c < n; ++c) p.at(k, c) = p.at(k, c) * inv;
            s = p;
            Mat sweep = p;
            pm += time_ms([&] { kernels::eliminate(sweep, k, k); });
            p = sweep;
            sweep = s;
            sm += time_ms([&] { kernels::eliminate_serial(sweep, k, k); });
            s = sweep;
            if (!(p == s)) break;
        }
        ok &= report("eliminate sweeps", pm, sm, p == s);
    }

    if (!ok) {
        std::cerr << "kernel flavours disagree\n";
        return 1;
    }
    return 0;
}
