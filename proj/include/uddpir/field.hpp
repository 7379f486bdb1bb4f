#ifndef UDDPIR_FIELD_HPP
#define UDDPIR_FIELD_HPP

#include <memory>
#include <vector>

#include "uddpir/errors.hpp"

namespace uddpir {

/// A finite field GF(q), q = p^m, with an explicit monic irreducible modulus
/// polynomial for m > 1. Elements are integers in [0, q) encoding polynomial
/// coefficients as base-p digits, least-significant digit = constant term.
///
/// Cheap to copy (shared immutable tables); all operations are pure and
/// safe for concurrent use.
class Field {
public:
    /// Construct GF(p^m). `modulus` lists coefficients constant-term first
    /// and must be monic of degree m; when omitted and m > 1, a built-in
    /// irreducible polynomial is used for (p,m) in {(2,2),(2,3),(2,4),(3,2)}.
    ///
    /// Throws NonPrimeCharacteristic, ReducibleModulus, MissingModulus.
    static Field create(int p, int m, std::vector<int> modulus = {});

    /// GF(q) for a prime power q, with the built-in modulus when q is not
    /// prime. Throws NonPrimeCharacteristic when q is not a prime power.
    static Field of_order(int q);

    int p() const { return impl_->p; }
    int m() const { return impl_->m; }
    int q() const { return impl_->q; }

    /// Modulus coefficients, constant term first, length m+1 (for m = 1 the
    /// convention x - 0, i.e. {0, 1}).
    const std::vector<int>& modulus() const { return impl_->modulus; }

    int add(int a, int b) const { return impl_->add_table[a * impl_->q + b]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int neg(int a) const { return impl_->neg_table[a]; }
    int mul(int a, int b) const { return impl_->mul_table[a * impl_->q + b]; }

    /// Multiplicative inverse. Throws ZeroInverse for a = 0.
    int inv(int a) const;

    bool valid(int a) const { return a >= 0 && a < impl_->q; }

    bool operator==(const Field& o) const {
        return impl_->p == o.impl_->p && impl_->m == o.impl_->m &&
               impl_->modulus == o.impl_->modulus;
    }

private:
    struct Impl {
        int p, m, q;
        std::vector<int> modulus;
        std::vector<int> add_table;
        std::vector<int> neg_table;
        std::vector<int> mul_table;
        std::vector<int> inv_table;  // inv_table[0] unused
    };

    explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

    std::shared_ptr<const Impl> impl_;
};

}  // namespace uddpir

#endif
