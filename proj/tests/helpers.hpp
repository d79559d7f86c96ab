#pragma once

#include <random>
#include <string>
#include <vector>

#include "fibercheck/parse.hpp"
#include "fibercheck/polynomial.hpp"

namespace testgen {

using namespace fibercheck;

inline Rational random_rational(std::mt19937& rng, int num_bound = 9, int den_bound = 4) {
    std::uniform_int_distribution<int> num(-num_bound, num_bound);
    std::uniform_int_distribution<int> den(1, den_bound);
    return Rational(num(rng), den(rng));
}

inline Scalar random_scalar(std::mt19937& rng, FieldConfig field, bool allow_irr = true) {
    Rational r = random_rational(rng);
    if (field.is_extension() && allow_irr && rng() % 2 == 0)
        return Scalar(r, random_rational(rng), field);
    return Scalar(r, field);
}

inline Scalar random_nonzero_scalar(std::mt19937& rng, FieldConfig field) {
    for (;;) {
        Scalar s = random_scalar(rng, field);
        if (!s.is_zero()) return s;
    }
}

inline Monomial random_monomial(std::mt19937& rng, std::size_t nvars, unsigned max_deg = 3) {
    std::uniform_int_distribution<unsigned> e(0, max_deg);
    std::vector<std::uint32_t> exps(nvars);
    for (auto& x : exps) x = e(rng);
    return Monomial(std::move(exps));
}

inline Polynomial random_poly(std::mt19937& rng, const VariableSet& vars, FieldConfig field,
                              unsigned max_deg = 3, unsigned max_terms = 4) {
    std::uniform_int_distribution<unsigned> nterms(0, max_terms);
    Polynomial p(vars, field);
    unsigned n = nterms(rng);
    for (unsigned i = 0; i < n; ++i)
        p += Polynomial::term(random_monomial(rng, vars.size(), max_deg), random_scalar(rng, field),
                              vars);
    return p;
}

inline Polynomial random_nonzero_poly(std::mt19937& rng, const VariableSet& vars, FieldConfig field,
                                      unsigned max_deg = 3, unsigned max_terms = 4) {
    for (;;) {
        Polynomial p = random_poly(rng, vars, field, max_deg, max_terms);
        if (!p.is_zero()) return p;
    }
}

}  // namespace testgen
