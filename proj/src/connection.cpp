#include "sfm/connection.hpp"

#include <stdexcept>

#include "reader.hpp"

namespace sfm {

namespace {
const Scalar kZero;

int row(Species s) { return s == Species::Plus ? 0 : 1; }
Species species_of(int r) { return r == 0 ? Species::Plus : Species::Minus; }
}  // namespace

const Scalar& Sl2Matrix::at(Species r, Species c) const {
    if (r == Species::Plus) return c == Species::Plus ? pp : pm;
    return c == Species::Plus ? mp : mm;
}

const Scalar& SymMatrix2::at(Species a, Species b) const {
    if (a != b) return pm;
    return a == Species::Plus ? pp : mm;
}

Connection::Connection(const std::map<int, Sl2Matrix>& coeffs) {
    for (const auto& [k, m] : coeffs) {
        if (!m.is_traceless())
            throw std::invalid_argument("A_" + std::to_string(k) + " is not traceless");
        if (!m.is_zero()) a_.emplace(k, m);
    }
}

Sl2Matrix Connection::at(int k) const {
    auto it = a_.find(k);
    return it == a_.end() ? Sl2Matrix{} : it->second;
}

CliffordParams::CliffordParams(const std::map<int, SymMatrix2>& coeffs) {
    for (const auto& [k, m] : coeffs)
        if (!m.is_zero()) c_.emplace(k, m);
}

const Scalar& CliffordParams::at(int k, Species a, Species b) const {
    auto it = c_.find(k);
    return it == c_.end() ? kZero : it->second.at(a, b);
}

int CliffordParams::max_k() const {
    if (c_.empty()) return 0;
    return std::max(0, c_.rbegin()->first);
}

bool CliffordParams::all_constant() const {
    for (const auto& [k, m] : c_)
        if (!m.pp.is_constant() || !m.pm.is_constant() || !m.mm.is_constant()) return false;
    return true;
}

bool CliffordParams::horizontal() const {
    for (const auto& [k, m] : c_)
        if (!m.pp.is_zero() || !m.mm.is_zero()) return false;
    return true;
}

CliffordParams CliffordParams::substitute(const std::map<std::string, Rational>& assignment) const {
    std::map<int, SymMatrix2> out;
    for (const auto& [k, m] : c_)
        out[k] = SymMatrix2{m.pp.substitute(assignment), m.pm.substitute(assignment),
                            m.mm.substitute(assignment)};
    return CliffordParams(out);
}

CliffordParams a_to_c(const Connection& A) {
    std::map<int, SymMatrix2> out;
    for (const auto& [k, a] : A.coeffs()) out[k] = SymMatrix2{-a.mp, a.pp, a.pm};
    return CliffordParams(out);
}

Connection c_to_a(const CliffordParams& C) {
    std::map<int, Sl2Matrix> out;
    for (const auto& [k, c] : C.coeffs()) out[k] = Sl2Matrix{c.pm, c.mm, -c.pp, -c.pm};
    return Connection(out);
}

Connection birkhoff(const Scalar& xi, const Scalar& eps) {
    return Connection({{1, Sl2Matrix{xi, 0, 0, -xi}}, {0, Sl2Matrix{eps, 0, 0, -eps}}});
}

int poisson_order(const Connection& A) {
    if (A.is_zero()) return 0;
    return std::max(0, A.coeffs().rbegin()->first);
}

bool is_regular(const Connection& A) { return poisson_order(A) == 0; }

FormalType formal_type(const Connection& A) {
    for (const auto& [k, a] : A.coeffs()) {
        if (k != 0 && k != 1)
            throw std::invalid_argument("not in Birkhoff form: A_" + std::to_string(k) + " != 0");
        if (!a.pm.is_zero() || !a.mp.is_zero())
            throw std::invalid_argument("not in Birkhoff form: A_" + std::to_string(k) +
                                        " is not diagonal");
    }
    return FormalType{A.at(1).pp, A.at(0).pp};
}

Laurent Laurent::monomial(int e, const Scalar& c) {
    Laurent l;
    l.add(e, c);
    return l;
}

void Laurent::add(int e, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = c_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) c_.erase(it);
    }
}

Scalar Laurent::at(int e) const {
    auto it = c_.find(e);
    return it == c_.end() ? Scalar{} : it->second;
}

Laurent Laurent::derivative() const {
    Laurent out;
    for (const auto& [e, c] : c_) out.add(e - 1, c * Scalar(static_cast<long>(e)));
    return out;
}

Laurent& Laurent::operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.c_) add(e, c);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.c_) add(e, -c);
    return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent out;
    for (const auto& [ea, ca] : a.c_)
        for (const auto& [eb, cb] : b.c_) out.add(ea + eb, ca * cb);
    return out;
}

Laurent Laurent::operator-() const {
    Laurent out;
    for (const auto& [e, c] : c_) out.add(e, -c);
    return out;
}

std::string Laurent::str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        if (!out.empty()) out += " + ";
        std::string cs = it->second.str();
        bool compound = it->second.terms().size() > 1;
        if (it->first == 0) {
            out += compound ? "(" + cs + ")" : cs;
            continue;
        }
        out += compound ? "(" + cs + ")" : cs;
        out += "*z^" + std::to_string(it->first);
    }
    return out;
}

Laurent parse_laurent(std::string_view text, const SymbolContext* ctx) {
    detail::Reader r(text);
    if (r.eof()) r.fail("empty Laurent polynomial");
    auto stop = [](detail::Reader& rd) { return rd.peek_ident() == "z"; };
    Laurent out;
    bool first = true;
    while (!r.eof()) {
        int sign = 1;
        if (r.accept('-'))
            sign = -1;
        else if (!r.accept('+') && !first)
            r.fail("expected '+' or '-'");
        first = false;
        while (r.accept('-')) sign = -sign;  // printed form writes "+ -c*z^e"
        Scalar coef(1);
        if (r.accept('(')) {
            coef = detail::read_scalar_sum(r, ctx, stop);
            r.expect(')');
            if (!r.accept('*') && !stop(r)) {
                out.add(0, sign < 0 ? -coef : coef);
                continue;
            }
        } else if (!stop(r)) {
            coef = detail::read_scalar_term(r, ctx, stop);
            if (!r.accept('*')) {
                if (!stop(r)) {
                    out.add(0, sign < 0 ? -coef : coef);
                    continue;
                }
            }
        }
        if (!stop(r)) r.fail("expected 'z'");
        r.read_ident();
        int e = 1;
        if (r.accept('^')) {
            bool paren = r.accept('(');
            e = static_cast<int>(r.read_int());
            if (paren) r.expect(')');
        }
        out.add(e, sign < 0 ? -coef : coef);
    }
    return out;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
    LaurentMatrix out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return out;
}

Laurent determinant(const LaurentMatrix& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

LaurentMatrix identity_matrix() {
    LaurentMatrix m;
    m[0][0] = Laurent(Scalar(1));
    m[1][1] = Laurent(Scalar(1));
    return m;
}

GaugeElement::GaugeElement(const LaurentMatrix& f) : f_(f) {
    if (!(determinant(f_) == Laurent(Scalar(1))))
        throw std::invalid_argument("gauge element must have determinant 1, got " +
                                    determinant(f_).str());
}

LaurentMatrix GaugeElement::inverse() const {
    LaurentMatrix inv;
    inv[0][0] = f_[1][1];
    inv[0][1] = -f_[0][1];
    inv[1][0] = -f_[1][0];
    inv[1][1] = f_[0][0];
    return inv;
}

LaurentMatrix connection_matrix(const Connection& A) {
    LaurentMatrix m;
    for (const auto& [k, a] : A.coeffs()) {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                m[i][j].add(-k - 1, a.at(species_of(i), species_of(j)));
    }
    return m;
}

Connection connection_from_matrix(const LaurentMatrix& m) {
    std::map<int, Sl2Matrix> out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (const auto& [e, c] : m[i][j].coeffs()) {
                Sl2Matrix& a = out[-e - 1];
                Scalar* slot = i == 0 ? (j == 0 ? &a.pp : &a.pm) : (j == 0 ? &a.mp : &a.mm);
                *slot = c;
            }
    return Connection(out);
}

Connection gauge_transform(const GaugeElement& F, const Connection& A) {
    const LaurentMatrix& f = F.matrix();
    LaurentMatrix finv = F.inverse();
    LaurentMatrix df;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) df[i][j] = f[i][j].derivative();
    LaurentMatrix left = df * finv;
    LaurentMatrix right = f * connection_matrix(A) * finv;
    LaurentMatrix total;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) total[i][j] = right[i][j] - left[i][j];
    return connection_from_matrix(total);
}

std::vector<GeneratorTerm> gauge_on_generators(const GaugeElement& F, Species species, int index) {
    LaurentMatrix finv = F.inverse();
    int col = row(species);
    std::vector<GeneratorTerm> out;
    for (int r = 0; r < 2; ++r)
        for (const auto& [e, c] : finv[r][col].coeffs())
            out.push_back(GeneratorTerm{species_of(r), index + e, c});
    return out;
}

}  // namespace sfm
