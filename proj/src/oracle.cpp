#include "sia/oracle.hpp"

namespace sia::oracle {

std::size_t rank(Rows rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        const Rat inv = rows[r][c].inv();
        for (std::size_t j = c; j < cols; ++j) rows[r][j] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            const Rat f = rows[i][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    return r;
}

std::size_t balanced_tensor_dim(std::size_t dimX, std::size_t dimA, std::size_t dimY,
                                const Cube& rightX, const Cube& leftY) {
    Rows rel;
    rel.reserve(dimX * dimA * dimY);
    for (std::size_t i = 0; i < dimX; ++i)
        for (std::size_t k = 0; k < dimA; ++k)
            for (std::size_t j = 0; j < dimY; ++j) {
                Vec row(dimX * dimY, Rat(0));
                for (std::size_t x = 0; x < dimX; ++x)
                    row[x * dimY + j] += rightX[i][k][x];
                for (std::size_t y = 0; y < dimY; ++y)
                    row[i * dimY + y] -= leftY[k][j][y];
                rel.push_back(std::move(row));
            }
    return dimX * dimY - rank(std::move(rel));
}

std::size_t balanced_hom_dim(std::size_t dimA, std::size_t dimX, std::size_t dimY,
                             const Cube& leftX, const Cube& leftY) {
    // Unknown matrix F with f(e_l) = sum_m F[m][l] e_m, flattened as m*dimX + l.
    Rows rel;
    rel.reserve(dimA * dimX * dimY);
    for (std::size_t k = 0; k < dimA; ++k)
        for (std::size_t i = 0; i < dimX; ++i)
            for (std::size_t m0 = 0; m0 < dimY; ++m0) {
                Vec row(dimX * dimY, Rat(0));
                for (std::size_t l = 0; l < dimX; ++l)
                    row[m0 * dimX + l] += leftX[k][i][l];
                for (std::size_t m = 0; m < dimY; ++m)
                    row[m * dimX + i] -= leftY[k][m][m0];
                rel.push_back(std::move(row));
            }
    return dimX * dimY - rank(std::move(rel));
}

bool self_induced(std::size_t dimA, const Cube& mul) {
    Rows mu;
    mu.reserve(dimA);
    for (std::size_t k = 0; k < dimA; ++k) {
        Vec row(dimA * dimA, Rat(0));
        for (std::size_t i = 0; i < dimA; ++i)
            for (std::size_t j = 0; j < dimA; ++j)
                row[i * dimA + j] = mul[i][j][k];
        mu.push_back(std::move(row));
    }
    if (rank(std::move(mu)) != dimA) return false;
    return balanced_tensor_dim(dimA, dimA, dimA, mul, mul) == dimA;
}

}  // namespace sia::oracle
