#include "qv/arith.hpp"

#include <map>
#include <mutex>
#include <vector>

#include "qv/errors.hpp"

namespace qv {

namespace {

// divisors by trial division up to sqrt(n); series orders keep n small
std::vector<uint64_t> divisors(uint64_t n) {
    std::vector<uint64_t> low, high;
    for (uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        low.push_back(d);
        if (d != n / d) high.push_back(n / d);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

std::mutex memo_mutex;

}  // namespace

mpz_class sigma_k(uint64_t n, unsigned k) {
    if (n == 0) throw BadParams("sigma_k requires n >= 1");
    static std::map<std::pair<uint64_t, unsigned>, mpz_class> memo;
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find({n, k});
        if (it != memo.end()) return it->second;
    }
    mpz_class total = 0;
    for (uint64_t d : divisors(n)) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), d, k);
        total += p;
    }
    std::lock_guard<std::mutex> lock(memo_mutex);
    memo[{n, k}] = total;
    return total;
}

Rational sigma_k_at_rational(const Rational& x, unsigned k) {
    if (!rat_is_integer(x) || x <= 0) return Rational(0);
    return Rational(sigma_k(static_cast<uint64_t>(rat_to_i64(x)), k));
}

uint64_t d_count(const DivisorQuery& q) {
    if (q.k == 0 || q.j >= q.k) throw BadParams("divisor query needs 0 <= j < k");
    if (q.n == 0) return 0;
    uint64_t count = 0;
    for (uint64_t d : divisors(q.n)) {
        if (d % q.k != q.j) continue;
        if (q.starred && (q.n / d) % 2 == 0) continue;
        ++count;
    }
    return count;
}

uint64_t d_jk(unsigned j, unsigned k, uint64_t n) { return d_count({n, j, k, false}); }

uint64_t d_star_jk(unsigned j, unsigned k, uint64_t n) { return d_count({n, j, k, true}); }

}  // namespace qv
