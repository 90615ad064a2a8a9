#include "sfm/qchar.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

#include "sfm/fockmod.hpp"

namespace sfm {

QPoly::QPoly(std::vector<Integer> c) : c_(std::move(c)) { trim(); }

QPoly QPoly::monomial(int e, const Integer& c) {
    if (e < 0) throw std::invalid_argument("negative q-exponent");
    std::vector<Integer> v(static_cast<std::size_t>(e) + 1, Integer(0));
    v.back() = c;
    return QPoly(std::move(v));
}

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Integer(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Integer(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly{};
    std::vector<Integer> c(a.c_.size() + b.c_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return QPoly(std::move(c));
}

QPoly QPoly::shifted(int e) const {
    if (e < 0) throw std::invalid_argument("negative q-shift");
    if (is_zero()) return *this;
    std::vector<Integer> c(static_cast<std::size_t>(e), Integer(0));
    c.insert(c.end(), c_.begin(), c_.end());
    return QPoly(std::move(c));
}

std::string QPoly::str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Integer a = abs(c_[i]);
        if (!out.empty())
            out += c_[i] < 0 ? " - " : " + ";
        else if (c_[i] < 0)
            out += "-";
        if (i == 0 || a != 1) out += a.get_str();
        if (i > 0) out += (a != 1 ? "*" : "") + std::string("q") + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return out;
}

namespace {

// (T choose K)_q with the conventions 0 for K < 0 and 1 for K = 0 (empty product), any T.
QPoly qbinom(int T, int K) {
    if (K < 0) return QPoly{};
    if (K == 0) return QPoly::one();
    if (T < K) {
        if (T >= 0) return QPoly{};
        throw std::invalid_argument("q-binomial with negative top and positive bottom");
    }
    return gauss_binomial(T, K);
}

int tri(int a) { return a * (a - 1) / 2; }

QPoly sum_side(int k, int M, int N, bool with_qx) {
    QPoly rhs;
    for (int x = 0; x <= N; ++x) {
        if (k + x > M) break;
        QPoly t = qbinom(M, k + x) * qbinom(N, x);
        rhs += t.shifted(tri(k + x) + tri(x) + (with_qx ? x : 0));
    }
    return rhs;
}

void check_range(int k, int M, int N) {
    if (M < 0 || N < 0 || k < 0 || k > M)
        throw std::invalid_argument("identity needs M, N >= 0 and 0 <= k <= M");
}

IdentityReport report(QPoly lhs, QPoly rhs) {
    IdentityReport r;
    r.diff = lhs - rhs;
    r.pass = r.diff.is_zero();
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    return r;
}

}  // namespace

QPoly gauss_binomial(int T, int K) {
    if (K < 0 || K > T) throw std::invalid_argument("gauss_binomial needs 0 <= K <= T");
    static std::mutex mu;
    static std::map<std::pair<int, int>, QPoly> memo;
    {
        std::lock_guard lk(mu);
        auto it = memo.find({T, K});
        if (it != memo.end()) return it->second;
    }
    QPoly r;
    if (K == 0 || K == T)
        r = QPoly::one();
    else
        r = gauss_binomial(T - 1, K - 1) + gauss_binomial(T - 1, K).shifted(K);
    std::lock_guard lk(mu);
    memo.emplace(std::make_pair(T, K), r);
    return r;
}

IdentityReport identity_sum_check(int k, int M, int N) {
    check_range(k, M, N);
    QPoly lhs = qbinom(M + N, M - k).shifted(tri(k));
    return report(lhs, sum_side(k, M, N, true));
}

IdentityReport identity_split_check(int k, int M, int N) {
    check_range(k, M, N);
    QPoly lhs = qbinom(M + N - 1, M - k).shifted(tri(k)) +
                qbinom(M + N - 1, M - k - 1).shifted(tri(k + 1));
    return report(lhs, sum_side(k, M, N, false));
}

bool is_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i > 0 && p[i] > p[i - 1]) return false;
    }
    return true;
}

int weight(const Partition& p) {
    int w = 0;
    for (int a : p) w += a;
    return w;
}

std::vector<Partition> partitions_in_box(int n, int parts, int largest) {
    std::vector<Partition> out;
    if (n < 0) return out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int rem, int maxpart) {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) >= parts) return;
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(n, largest);
    return out;
}

std::vector<Partition> partitions_of(int n) { return partitions_in_box(n, n, n); }

std::string partition_str(const Partition& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + ")";
}

Split bijection_forward(const Partition& X, int k, int M, int N) {
    if (k < 0 || M < 0 || N < 0 || k > M) throw std::invalid_argument("need 0 <= k <= M, N >= 0");
    if (!is_partition(X)) throw std::invalid_argument("not a partition: " + partition_str(X));
    if (static_cast<int>(X.size()) > M - k || (!X.empty() && X.front() > N + k))
        throw std::invalid_argument("partition " + partition_str(X) + " outside the " +
                                    std::to_string(M - k) + "x" + std::to_string(N + k) + " box");
    auto count_ge = [&](int t) {
        return static_cast<int>(std::count_if(X.begin(), X.end(), [t](int a) { return a >= t; }));
    };
    int x = 0;
    for (int c = N; c >= 0; --c)
        if (count_ge(k + c) >= c) {
            x = c;
            break;
        }
    Split s;
    s.x = x;
    for (int i = 0; i < x; ++i)
        if (X[static_cast<std::size_t>(i)] - (k + x) > 0) s.right.push_back(X[static_cast<std::size_t>(i)] - (k + x));
    s.left.assign(X.begin() + x, X.end());
    return s;
}

Partition bijection_inverse(const Split& s, int k, int M, int N) {
    const int x = s.x;
    if (x < 0 || x > N || k + x > M) throw std::invalid_argument("split index out of range");
    if (!is_partition(s.left) || !is_partition(s.right)) throw std::invalid_argument("malformed split");
    if (static_cast<int>(s.left.size()) > M - k - x || (!s.left.empty() && s.left.front() > k + x))
        throw std::invalid_argument("left part outside its box");
    if (static_cast<int>(s.right.size()) > x || (!s.right.empty() && s.right.front() > N - x))
        throw std::invalid_argument("right part outside its box");
    Partition X;
    for (int i = 0; i < x; ++i)
        X.push_back((i < static_cast<int>(s.right.size()) ? s.right[static_cast<std::size_t>(i)] : 0) + k + x);
    X.insert(X.end(), s.left.begin(), s.left.end());
    X.erase(std::remove(X.begin(), X.end(), 0), X.end());
    std::sort(X.rbegin(), X.rend());
    return X;
}

CharacterTable module_character(const CliffordParams& C, int k_min, int k_max, int d_max) {
    if (!C.horizontal())
        throw std::invalid_argument("per-k characters need C^{++} = C^{--} = 0");
    CharacterTable t;
    for (int k = k_min; k <= k_max; ++k) {
        for (int d = 0; d <= d_max; ++d) t[{k, d}] = 0;
        for (const auto& m : basis_enumerate(total2_of_v(k) + 2 * d_max, {k})) {
            int off = (degrees(m).total2 - total2_of_v(k)) / 2;
            ++t[{k, off}];
        }
    }
    return t;
}

std::vector<std::size_t> whittaker_character(int /*k*/, int d_max) {
    std::vector<std::size_t> out;
    for (int d = 0; d <= d_max; ++d) out.push_back(partitions_of(d).size());
    return out;
}

Integer z_mu(const Partition& mu) {
    Integer z(1);
    std::map<int, int> mult;
    for (int a : mu) ++mult[a];
    for (const auto& [a, m] : mult) {
        for (int i = 0; i < m; ++i) z *= a;
        for (int i = 2; i <= m; ++i) z *= i;
    }
    return z;
}

namespace {

// Beta-set (first-column hook lengths) of lambda padded to `len` parts.
std::vector<int> beta_set(const Partition& lambda, int len) {
    std::vector<int> b;
    for (int i = 0; i < len; ++i) {
        int part = i < static_cast<int>(lambda.size()) ? lambda[static_cast<std::size_t>(i)] : 0;
        b.push_back(part + len - 1 - i);
    }
    return b;  // strictly decreasing
}

Integer mn_rec(std::vector<int> beta, const Partition& mu, std::size_t pos) {
    if (pos == mu.size()) return Integer(1);
    const int r = mu[pos];
    Integer total(0);
    for (std::size_t i = 0; i < beta.size(); ++i) {
        int target = beta[i] - r;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        // beads strictly between target and beta[i] give the leg length
        int between = 0;
        for (int b : beta)
            if (b > target && b < beta[i]) ++between;
        std::vector<int> nb(beta);
        nb[i] = target;
        std::sort(nb.rbegin(), nb.rend());
        Integer sub = mn_rec(nb, mu, pos + 1);
        if (between % 2) sub = -sub;
        total += sub;
    }
    return total;
}

}  // namespace

Integer mn_character(const Partition& lambda, const Partition& mu) {
    if (weight(lambda) != weight(mu)) throw std::invalid_argument("weights differ");
    int len = static_cast<int>(lambda.size());
    return mn_rec(beta_set(lambda, len), mu, 0);
}

SymmetricExpr schur_to_power_sums(const Partition& lambda) {
    if (!is_partition(lambda)) throw std::invalid_argument("not a partition: " + partition_str(lambda));
    if (weight(lambda) > 12) throw std::invalid_argument("Schur expansion limited to weight <= 12");
    SymmetricExpr e;
    for (const auto& mu : partitions_of(weight(lambda))) {
        Integer chi = mn_character(lambda, mu);
        if (chi != 0) e[mu] = Rational(chi, z_mu(mu));
    }
    for (auto& [mu, c] : e) c.canonicalize();
    return e;
}

SymmetricExpr elementary_to_power_sums(int j) {
    if (j < 0) throw std::invalid_argument("negative degree");
    SymmetricExpr e;
    for (const auto& mu : partitions_of(j)) {
        Rational c(1, 1);
        c /= Rational(z_mu(mu));
        if ((j - static_cast<int>(mu.size())) % 2) c = -c;
        e[mu] = c;
    }
    return e;
}

std::string symmetric_str(const SymmetricExpr& e) {
    if (e.empty()) return "0";
    std::string out;
    for (const auto& [mu, c] : e) {
        if (!out.empty()) out += " + ";
        out += to_string(c);
        for (int a : mu) out += "*p" + std::to_string(a);
    }
    return out;
}

Vector apply_symmetric(const SymmetricExpr& expr, const Vector& v) {
    Vector out;
    for (const auto& [mu, c] : expr) {
        Vector x = v;
        for (int a : mu) x = shift(-a, x);
        out.add(x, Scalar(c));
    }
    return out;
}

}  // namespace sfm
