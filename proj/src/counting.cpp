#include "spermat/counting.hpp"

namespace spermat {

BigInt q_value(const ClassTable& table, int k) {
    require_complete(table);
    if (k < 0 || k > table.n * table.n)
        throw ValidationError("k out of range 0..n^2");
    BigInt sum = 0;
    for (const auto& c : table.classes)
        if (c.k == k) sum += BigInt(c.orbit_size) * c.weight;
    return sum;
}

BigInt xi(const ClassTable& table) {
    require_complete(table);
    BigInt sum = 0;
    for (const auto& c : table.classes) {
        const BigInt term = BigInt(c.orbit_size) * c.weight;
        if (c.k % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

BigInt eta(const ClassTable& table) {
    const BigInt sigma = ipow(factorial(table.n), 2 * table.n);
    const BigInt product = sigma * xi(table);
    if ((product & 1) != 0)
        throw Error("internal inconsistency: (n!)^{2n} * xi is odd");  // impossible for n >= 1
    return product / 2;
}

BigRat probability(const ClassTable& table) {
    if (table.n == 1) throw UndefinedForN1();
    const BigInt sigma = ipow(factorial(table.n), 2 * table.n);
    return BigRat(xi(table), sigma - 1);
}

CountReport full_report(const ClassTable& table, int decimal_places) {
    require_complete(table);
    CountReport r;
    r.n = table.n;
    r.decimal_places = decimal_places;
    r.sigma_count = ipow(factorial(table.n), 2 * table.n);
    const int cells = table.n * table.n;
    r.q.reserve(static_cast<std::size_t>(cells) + 1);
    for (int k = 0; k <= cells; ++k) r.q.push_back(q_value(table, k));
    r.xi = xi(table);
    r.eta = eta(table);
    if (table.n >= 2) {
        r.p = probability(table);
        r.p_decimal = decimal_string(*r.p, decimal_places);
    }
    return r;
}

}  // namespace spermat
