#ifndef ENTRYWISE_TABLEAUX_HPP
#define ENTRYWISE_TABLEAUX_HPP

#include "entrywise/exponents.hpp"
#include "entrywise/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace entrywise {

/// Weakly decreasing non-negative shape derived from an exponent tuple,
/// lambda_i = n_{N-i} - (N-i). Trailing zero rows are kept implicit.
struct TableauShape {
    std::vector<long long> lambda;
    std::size_t variables = 0; // entries drawn from {1, ..., variables}

    static TableauShape from_exponents(const ExponentTuple& n) {
        TableauShape s;
        s.lambda = n.shape_lambda();
        s.variables = n.size();
        while (!s.lambda.empty() && s.lambda.back() == 0) s.lambda.pop_back();
        for (std::size_t i = 1; i < s.lambda.size(); ++i) {
            if (s.lambda[i] > s.lambda[i - 1]) throw std::logic_error("TableauShape: shape not weakly decreasing");
        }
        if (!s.lambda.empty() && s.lambda.front() < 0) throw std::domain_error("TableauShape: negative part");
        return s;
    }

    long long cells() const {
        long long c = 0;
        for (long long row : lambda) c += row;
        return c;
    }
};

struct EnumerationBudgetExceeded : std::runtime_error {
    explicit EnumerationBudgetExceeded(std::uint64_t budget)
        : std::runtime_error("tableau enumeration budget of " + std::to_string(budget) + " exceeded") {}
};

namespace detail {

/// Backtracking enumeration of semistandard Young tableaux of the given
/// shape with entries in {1, ..., variables}: rows weakly increase, columns
/// strictly increase. Cells are filled row-major and each completed tableau
/// is reported through its content vector (multiplicity of every label).
template <typename Visitor>
void enumerate_ssyt(const TableauShape& shape, std::uint64_t budget, Visitor&& visit) {
    const auto& lambda = shape.lambda;
    const std::size_t rows = lambda.size();
    const std::size_t vars = shape.variables;
    if (rows == 0) {
        std::vector<std::uint32_t> content(vars, 0);
        visit(content);
        return;
    }
    if (rows > vars) return; // first column cannot strictly increase

    std::vector<std::vector<std::uint32_t>> cell(rows);
    for (std::size_t i = 0; i < rows; ++i) cell[i].assign(static_cast<std::size_t>(lambda[i]), 0);
    std::vector<std::uint32_t> content(vars, 0);
    std::uint64_t produced = 0;

    // column j is occupied in rows 0..height(j)-1
    std::vector<std::uint32_t> colHeight(static_cast<std::size_t>(lambda[0]), 0);
    for (std::size_t i = 0; i < rows; ++i) {
        for (long long j = 0; j < lambda[i]; ++j) ++colHeight[static_cast<std::size_t>(j)];
    }

    struct Pos {
        std::size_t row, col;
    };
    std::vector<Pos> order;
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cell[i].size(); ++j) order.push_back({i, j});
    }

    auto recurse = [&](auto&& self, std::size_t k) -> void {
        if (k == order.size()) {
            if (++produced > budget) throw EnumerationBudgetExceeded(budget);
            visit(content);
            return;
        }
        const auto [i, j] = order[k];
        std::uint32_t lo = 1;
        if (j > 0) lo = std::max(lo, cell[i][j - 1]);     // weak increase along the row
        if (i > 0) lo = std::max(lo, cell[i - 1][j] + 1); // strict increase down the column
        const std::uint32_t slack = colHeight[j] - 1 - static_cast<std::uint32_t>(i);
        const std::uint32_t hi = static_cast<std::uint32_t>(vars) - slack; // room for the rest of the column
        for (std::uint32_t v = lo; v <= hi; ++v) {
            cell[i][j] = v;
            ++content[v - 1];
            self(self, k + 1);
            --content[v - 1];
        }
        cell[i][j] = 0;
    };
    recurse(recurse, 0);
}

} // namespace detail

template <typename T>
struct TableauxEvaluation {
    T value{};
    BigInt count{};
};

/// Littlewood sum: s_n(u) = sum over SSYT of shape n - delta of the monomial
/// u^content. Works for any coordinates (zeros and repeats included) and is
/// exact over rational inputs. Also reports the number of tableaux.
template <typename T>
TableauxEvaluation<T> schur_tableaux(std::span<const T> u, const ExponentTuple& n,
                                     std::uint64_t budget = 1000000) {
    if (u.size() != n.size()) throw std::invalid_argument("schur_tableaux: |u| must equal |n|");
    const TableauShape shape = TableauShape::from_exponents(n);
    TableauxEvaluation<T> out;
    out.value = T(0);
    out.count = 0;
    detail::enumerate_ssyt(shape, budget, [&](const std::vector<std::uint32_t>& content) {
        T monomial = T(1);
        for (std::size_t i = 0; i < content.size(); ++i) {
            for (std::uint32_t c = 0; c < content[i]; ++c) monomial *= u[i];
        }
        out.value += monomial;
        out.count += 1;
    });
    return out;
}

/// Number of SSYT of shape n - delta with entries in {1..N}; equals V(n)/V(delta).
inline BigInt tableau_count(const ExponentTuple& n, std::uint64_t budget = 1000000) {
    const TableauShape shape = TableauShape::from_exponents(n);
    BigInt count = 0;
    detail::enumerate_ssyt(shape, budget, [&](const std::vector<std::uint32_t>&) { count += 1; });
    return count;
}

} // namespace entrywise

#endif // ENTRYWISE_TABLEAUX_HPP
