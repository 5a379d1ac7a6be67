#pragma once

// Novikov and pre-Novikov identities written once over a generic exact
// scalar type. The rational checkers instantiate this with Scalar; the
// bulk enumeration filter instantiates it with int64 on small tables.

#include "prenov/scalar.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace prenov::detail {

template <class T>
struct Table {
    std::size_t n;
    const T* c;
    const T& operator()(std::size_t i, std::size_t j, std::size_t k) const { return c[(i * n + j) * n + k]; }
};

inline bool nonzero(std::int64_t v) { return v != 0; }
inline bool nonzero(const Scalar& v) { return !v.is_zero(); }

template <class T>
bool nonzero_vec(const std::vector<T>& v) {
    for (const auto& x : v)
        if (nonzero(x)) return true;
    return false;
}

/// (e_i · e_j) · e_k
template <class T>
void prod_then(const Table<T>& first, std::size_t i, std::size_t j, const Table<T>& second, std::size_t k,
               std::vector<T>& out, int sign) {
    for (std::size_t m = 0; m < first.n; ++m) {
        const T& c = first(i, j, m);
        if (!nonzero(c)) continue;
        for (std::size_t p = 0; p < first.n; ++p) {
            if (sign > 0)
                out[p] += c * second(m, k, p);
            else
                out[p] -= c * second(m, k, p);
        }
    }
}

/// e_i · (e_j · e_k)
template <class T>
void prod_into(const Table<T>& outer, std::size_t i, const Table<T>& inner, std::size_t j, std::size_t k,
               std::vector<T>& out, int sign) {
    for (std::size_t m = 0; m < outer.n; ++m) {
        const T& c = inner(j, k, m);
        if (!nonzero(c)) continue;
        for (std::size_t p = 0; p < outer.n; ++p) {
            if (sign > 0)
                out[p] += c * outer(i, m, p);
            else
                out[p] -= c * outer(i, m, p);
        }
    }
}

/// Evaluates the two Novikov identities on every basis triple. `sink(id,
/// i, j, k, residual)` is called for each nonzero residual and returns
/// false to stop early. id 0: left-symmetry of associators, 1: right
/// commutativity.
template <class T, class Sink>
void eval_novikov(const Table<T>& op, Sink&& sink) {
    const std::size_t n = op.n;
    std::vector<T> res(n);
    for (int id = 0; id < 2; ++id)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    for (auto& x : res) x = T(0);
                    if (id == 0) {
                        // (a∘b)∘c − a∘(b∘c) − (b∘a)∘c + b∘(a∘c)
                        prod_then(op, i, j, op, k, res, +1);
                        prod_into(op, i, op, j, k, res, -1);
                        prod_then(op, j, i, op, k, res, -1);
                        prod_into(op, j, op, i, k, res, +1);
                    } else {
                        // (a∘b)∘c − (a∘c)∘b
                        prod_then(op, i, j, op, k, res, +1);
                        prod_then(op, i, k, op, j, res, -1);
                    }
                    if (nonzero_vec(res) && !sink(id, i, j, k, res)) return;
                }
}

/// The four pre-Novikov identities with ∘ = ◁ + ▷ supplied precomputed.
/// id 0..3 in the order: ▷▷, ▷◁, ∘▷, ◁◁.
template <class T, class Sink>
void eval_pre_novikov(const Table<T>& lhd, const Table<T>& rhd, const Table<T>& circ, Sink&& sink) {
    const std::size_t n = lhd.n;
    std::vector<T> res(n);
    for (int id = 0; id < 4; ++id)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    for (auto& x : res) x = T(0);
                    switch (id) {
                        case 0:
                            // a▷(b▷c) − (a∘b)▷c − b▷(a▷c) + (b∘a)▷c
                            prod_into(rhd, i, rhd, j, k, res, +1);
                            prod_then(circ, i, j, rhd, k, res, -1);
                            prod_into(rhd, j, rhd, i, k, res, -1);
                            prod_then(circ, j, i, rhd, k, res, +1);
                            break;
                        case 1:
                            // a▷(b◁c) − (a▷b)◁c − b◁(a∘c) + (b◁a)◁c
                            prod_into(rhd, i, lhd, j, k, res, +1);
                            prod_then(rhd, i, j, lhd, k, res, -1);
                            prod_into(lhd, j, circ, i, k, res, -1);
                            prod_then(lhd, j, i, lhd, k, res, +1);
                            break;
                        case 2:
                            // (a∘b)▷c − (a▷c)◁b
                            prod_then(circ, i, j, rhd, k, res, +1);
                            prod_then(rhd, i, k, lhd, j, res, -1);
                            break;
                        default:
                            // (a◁b)◁c − (a◁c)◁b
                            prod_then(lhd, i, j, lhd, k, res, +1);
                            prod_then(lhd, i, k, lhd, j, res, -1);
                            break;
                    }
                    if (nonzero_vec(res) && !sink(id, i, j, k, res)) return;
                }
}

}  // namespace prenov::detail
