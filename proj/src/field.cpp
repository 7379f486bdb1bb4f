#include "uddpir/field.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace uddpir {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Polynomials over GF(p) as coefficient vectors, constant term first.
using Poly = std::vector<int>;

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return trim(r);
}

// Remainder of a modulo the monic polynomial mod.
Poly poly_rem(Poly a, const Poly& mod, int p) {
    a = trim(a);
    const int deg_m = static_cast<int>(mod.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= deg_m) {
        int shift = static_cast<int>(a.size()) - 1 - deg_m;
        int coef = a.back();
        for (int i = 0; i <= deg_m; ++i) {
            int& c = a[shift + i];
            c = ((c - coef * mod[i]) % p + p) % p;
        }
        a = trim(a);
    }
    return a;
}

int poly_to_value(const Poly& a, int p) {
    int v = 0;
    for (size_t i = a.size(); i-- > 0;) v = v * p + a[i];
    return v;
}

Poly value_to_poly(int v, int p) {
    Poly a;
    while (v > 0) {
        a.push_back(v % p);
        v /= p;
    }
    return a;
}

// Trial factorization: a degree-m polynomial is reducible iff it has a
// monic factor of degree 1..m/2. Desk scale (q <= 256), so enumerating
// candidate factors is fine.
bool is_irreducible(const Poly& f, int p) {
    const int deg = static_cast<int>(f.size()) - 1;
    if (deg < 1) return false;
    if (f[0] == 0) return deg == 1;  // divisible by x
    for (int d = 1; 2 * d <= deg; ++d) {
        int count = 1;
        for (int i = 0; i < d; ++i) count *= p;  // p^d monic candidates
        for (int v = 0; v < count; ++v) {
            Poly g = value_to_poly(v, p);
            g.resize(d + 1, 0);
            g[d] = 1;
            if (poly_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

const std::map<std::pair<int, int>, Poly>& builtin_moduli() {
    static const std::map<std::pair<int, int>, Poly> table = {
        {{2, 2}, {1, 1, 1}},        // x^2 + x + 1
        {{2, 3}, {1, 1, 0, 1}},     // x^3 + x + 1
        {{2, 4}, {1, 1, 0, 0, 1}},  // x^4 + x + 1
        {{3, 2}, {1, 0, 1}},        // x^2 + 1
    };
    return table;
}

}  // namespace

Field Field::create(int p, int m, std::vector<int> modulus) {
    if (!is_prime(p))
        throw NonPrimeCharacteristic("characteristic " + std::to_string(p) +
                                     " is not prime");
    if (m < 1) throw Error("extension degree must be >= 1");

    if (m == 1) {
        modulus = {0, 1};  // x - 0 convention for prime fields
    } else if (modulus.empty()) {
        auto it = builtin_moduli().find({p, m});
        if (it == builtin_moduli().end())
            throw MissingModulus("no built-in modulus for GF(" +
                                 std::to_string(p) + "^" + std::to_string(m) +
                                 "); supply one explicitly");
        modulus = it->second;
    } else {
        if (static_cast<int>(modulus.size()) != m + 1 || modulus[m] != 1)
            throw Error("modulus must be monic of degree m");
        for (int& c : modulus) c = ((c % p) + p) % p;
        if (modulus[m] != 1) throw Error("modulus must be monic of degree m");
        if (!is_irreducible(modulus, p))
            throw ReducibleModulus("modulus polynomial is reducible over GF(" +
                                   std::to_string(p) + ")");
    }

    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->m = m;
    int q = 1;
    for (int i = 0; i < m; ++i) {
        if (q > 256 / p) throw Error("field order above 256 is unsupported");
        q *= p;
    }
    impl->q = q;
    impl->modulus = modulus;

    impl->add_table.resize(q * q);
    impl->neg_table.resize(q);
    impl->mul_table.resize(q * q);
    impl->inv_table.assign(q, 0);

    for (int a = 0; a < q; ++a) {
        // digit-wise mod-p addition
        for (int b = 0; b < q; ++b) {
            int x = a, y = b, pw = 1, s = 0;
            for (int i = 0; i < m; ++i) {
                s += ((x % p + y % p) % p) * pw;
                x /= p;
                y /= p;
                pw *= p;
            }
            impl->add_table[a * q + b] = s;
        }
        {
            int x = a, pw = 1, s = 0;
            for (int i = 0; i < m; ++i) {
                s += ((p - x % p) % p) * pw;
                x /= p;
                pw *= p;
            }
            impl->neg_table[a] = s;
        }
    }
    for (int a = 0; a < q; ++a) {
        Poly pa = value_to_poly(a, p);
        for (int b = 0; b <= a; ++b) {
            Poly pb = value_to_poly(b, p);
            int prod = poly_to_value(poly_rem(poly_mul(pa, pb, p), modulus, p), p);
            impl->mul_table[a * q + b] = prod;
            impl->mul_table[b * q + a] = prod;
            if (prod == 1) {
                impl->inv_table[a] = b;
                impl->inv_table[b] = a;
            }
        }
    }
    return Field(std::move(impl));
}

Field Field::of_order(int q) {
    for (int p = 2; p <= q; ++p) {
        if (!is_prime(p)) continue;
        int m = 0, v = q;
        while (v % p == 0) {
            v /= p;
            ++m;
        }
        if (v == 1 && m >= 1) return create(p, m);
        if (m > 0) break;  // divisible by p but not a power of it
    }
    throw NonPrimeCharacteristic(std::to_string(q) + " is not a prime power");
}

int Field::inv(int a) const {
    if (a == 0) throw ZeroInverse("zero has no multiplicative inverse");
    return impl_->inv_table[a];
}

}  // namespace uddpir
