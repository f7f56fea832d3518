#include "weiljac/expansions.hpp"

#include "weiljac/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace weiljac {

namespace {

Rational product_prec(const Rational& p1, const Rational& f1, const Rational& p2, const Rational& f2) {
    return std::min(p1 + f2, p2 + f1);
}

}  // namespace

// ---------------------------------------------------------------------------
// VVExpansion

bool VVExpansion::in_class(const Rational& n, std::size_t gamma) const {
    const Rational& q = group->q(gamma).value();
    return (dual ? n + q : n - q).is_integer();
}

Rational VVExpansion::coeff(const Rational& n, std::size_t gamma) const {
    auto it = coeffs.find(VVKey{n, gamma});
    return it == coeffs.end() ? Rational(0) : it->second;
}

void VVExpansion::set(const Rational& n, std::size_t gamma, const Rational& c) {
    if (gamma >= group->order()) throw DomainError("component index out of range");
    if (!in_class(n, gamma))
        throw DomainError("exponent " + n.str() + " not in the class of " + to_string(group->element(gamma)));
    if (n >= prec) throw DomainError("exponent " + n.str() + " beyond precision " + prec.str());
    if (c.is_zero()) coeffs.erase(VVKey{n, gamma});
    else coeffs[VVKey{n, gamma}] = c;
}

void VVExpansion::add(const Rational& n, std::size_t gamma, const Rational& c) {
    if (c.is_zero()) return;
    set(n, gamma, coeff(n, gamma) + c);
}

Rational VVExpansion::floor() const { return coeffs.empty() ? prec : coeffs.begin()->first.n; }

VVExpansion VVExpansion::truncated(const Rational& p) const {
    VVExpansion r(group, weight, dual, std::min(p, prec));
    for (const auto& [k, c] : coeffs)
        if (k.n < r.prec) r.coeffs.emplace(k, c);
    return r;
}

// ---------------------------------------------------------------------------
// JacobiExpansion

JacobiExpansion::JacobiExpansion(GroupPtr g, Rational k, bool is_dual, JacobiIndex idx, Rational precision, Rational h)
    : group(std::move(g)), weight(std::move(k)), dual(is_dual), index(std::move(idx)), prec(std::move(precision)),
      weak_bound(std::move(h)) {
    if (weak_bound.sign() < 0) throw DomainError("pole depth must be non-negative");
    if (index.m.rows() > 0) {
        validate_index(group->gram(), index);
        m_inv_ = inverse(index.m);
    } else if (index.b.rows() != group->dim()) {
        index.b = RatMatrix(group->dim(), 0);
    }
}

Rational JacobiExpansion::norm(const RatVec& r) const {
    if (r.empty()) return Rational(0);
    return dot(r, m_inv_ * r);
}

Rational JacobiExpansion::coeff(const Rational& n, const RatVec& r, std::size_t gamma) const {
    auto it = coeffs.find(JKey{n, gamma, r});
    return it == coeffs.end() ? Rational(0) : it->second;
}

void JacobiExpansion::set(const Rational& n, const RatVec& r, std::size_t gamma, const Rational& c) {
    if (gamma >= group->order()) throw DomainError("component index out of range");
    if (r.size() != n_vars()) throw DomainError("r has the wrong length");
    const Rational& q = group->q(gamma).value();
    if (!(dual ? n + q : n - q).is_integer())
        throw DomainError("exponent " + n.str() + " not in the class of " + to_string(group->element(gamma)));
    if (group->dim() > 0) {
        RatVec shift = index.b.transpose() * (group->gram().rational() * group->element(gamma));
        if (!is_integral(dual ? r + shift : r - shift))
            throw DomainError("r = " + to_string(r) + " violates the support condition for " +
                              to_string(group->element(gamma)));
    } else if (!is_integral(r)) {
        throw DomainError("r = " + to_string(r) + " must be integral");
    }
    if (Rational(4) * n - norm(r) < Rational(-4) * weak_bound)
        throw DomainError("coefficient at n = " + n.str() + ", r = " + to_string(r) + " below the discriminant bound");
    if (n >= prec) throw DomainError("exponent " + n.str() + " beyond precision " + prec.str());
    if (c.is_zero()) coeffs.erase(JKey{n, gamma, r});
    else coeffs[JKey{n, gamma, r}] = c;
}

void JacobiExpansion::add(const Rational& n, const RatVec& r, std::size_t gamma, const Rational& c) {
    if (c.is_zero()) return;
    set(n, r, gamma, coeff(n, r, gamma) + c);
}

Rational JacobiExpansion::floor() const { return coeffs.empty() ? prec : coeffs.begin()->first.n; }

JacobiExpansion JacobiExpansion::truncated(const Rational& p) const {
    JacobiExpansion r = *this;
    r.prec = std::min(p, prec);
    r.coeffs.clear();
    for (const auto& [k, c] : coeffs)
        if (k.n < r.prec) r.coeffs.emplace(k, c);
    return r;
}

// ---------------------------------------------------------------------------
// ScalarQSeries

ScalarQSeries ScalarQSeries::from_integer_coeffs(const std::vector<Rational>& a) {
    ScalarQSeries s(1, Rational(static_cast<long>(a.size())));
    for (std::size_t i = 0; i < a.size(); ++i) s.set(Rational(static_cast<long>(i)), a[i]);
    return s;
}

Rational ScalarQSeries::coeff(const Rational& e) const {
    auto it = coeffs.find(e);
    return it == coeffs.end() ? Rational(0) : it->second;
}

void ScalarQSeries::set(const Rational& e, const Rational& c) {
    if (denom % e.den() != 0) throw DomainError("exponent " + e.str() + " not in (1/" + std::to_string(denom) + ")Z");
    if (e >= prec) throw DomainError("exponent " + e.str() + " beyond precision " + prec.str());
    if (c.is_zero()) coeffs.erase(e);
    else coeffs[e] = c;
}

void ScalarQSeries::add(const Rational& e, const Rational& c) {
    if (!c.is_zero()) set(e, coeff(e) + c);
}

Rational ScalarQSeries::floor() const { return coeffs.empty() ? prec : coeffs.begin()->first; }

ScalarQSeries ScalarQSeries::truncated(const Rational& p) const {
    ScalarQSeries r(denom, std::min(p, prec));
    for (const auto& [e, c] : coeffs)
        if (e < r.prec) r.coeffs.emplace(e, c);
    return r;
}

std::string ScalarQSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs) {
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        Rational a = abs(c);
        if (e.is_zero()) {
            os << a;
        } else {
            if (a != Rational(1)) os << a;
            os << "q";
            if (e != Rational(1)) os << (e.is_integer() ? "^" + e.str() : "^(" + e.str() + ")");
        }
        first = false;
    }
    if (!first) os << " + ";
    os << "O(q^" << (prec.is_integer() ? prec.str() : "(" + prec.str() + ")") << ")";
    return os.str();
}

// ---------------------------------------------------------------------------
// vector-valued arithmetic

namespace {

void require_compatible(const VVExpansion& f, const VVExpansion& g) {
    if (!(f.group->gram() == g.group->gram())) throw DomainError("expansions live on different lattices");
    if (f.dual != g.dual) throw DomainError("dual flags differ");
    if (f.weight != g.weight) throw DomainError("weights differ");
}

}  // namespace

VVExpansion vv_add(const VVExpansion& f, const VVExpansion& g) {
    require_compatible(f, g);
    VVExpansion r = f.truncated(std::min(f.prec, g.prec));
    for (const auto& [k, c] : g.coeffs)
        if (k.n < r.prec) r.add(k.n, k.gamma, c);
    return r;
}

VVExpansion vv_scale(const VVExpansion& f, const Rational& c) {
    VVExpansion r(f.group, f.weight, f.dual, f.prec);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : f.coeffs) r.coeffs.emplace(k, c * v);
    return r;
}

VVExpansion vv_sub(const VVExpansion& f, const VVExpansion& g) { return vv_add(f, vv_scale(g, Rational(-1))); }

bool vv_equal(const VVExpansion& f, const VVExpansion& g) {
    return f.group->gram() == g.group->gram() && f.weight == g.weight && f.dual == g.dual && f.prec == g.prec &&
           f.coeffs == g.coeffs;
}

bool vv_agree(const VVExpansion& f, const VVExpansion& g) {
    if (!(f.group->gram() == g.group->gram())) return false;
    const Rational p = std::min(f.prec, g.prec);
    return f.truncated(p).coeffs == g.truncated(p).coeffs;
}

namespace {

// Index map (i, j) -> index of (gamma_i, gamma_j) in the direct sum group.
std::vector<std::size_t> pair_map(const DiscriminantGroup& a, const DiscriminantGroup& b, const DiscriminantGroup& ab) {
    std::vector<std::size_t> out(a.order() * b.order());
    for (std::size_t i = 0; i < a.order(); ++i)
        for (std::size_t j = 0; j < b.order(); ++j) {
            RatVec v = a.element(i);
            v.insert(v.end(), b.element(j).begin(), b.element(j).end());
            out[i * b.order() + j] = ab.index_of(v);
        }
    return out;
}

}  // namespace

VVExpansion vv_tensor(const VVExpansion& f, const VVExpansion& g) {
    if (f.dual != g.dual) throw DomainError("tensor of expansions with different dual flags");
    auto group = discriminant_group(direct_sum(f.group->gram(), g.group->gram()));
    const auto idx = pair_map(*f.group, *g.group, *group);
    VVExpansion r(group, f.weight + g.weight, f.dual, product_prec(f.prec, f.floor(), g.prec, g.floor()));
    for (const auto& [k1, c1] : f.coeffs)
        for (const auto& [k2, c2] : g.coeffs) {
            Rational n = k1.n + k2.n;
            if (n < r.prec) r.add(n, idx[k1.gamma * g.group->order() + k2.gamma], c1 * c2);
        }
    return r;
}

JacobiExpansion jacobi_tensor(const JacobiExpansion& a, const JacobiExpansion& b) {
    if (a.dual != b.dual) throw DomainError("tensor of expansions with different dual flags");
    if (a.n_vars() != b.n_vars()) throw DomainError("Jacobi variables differ in number");
    const std::size_t e1 = a.group->dim(), e2 = b.group->dim(), n = a.n_vars();
    auto group = discriminant_group(direct_sum(a.group->gram(), b.group->gram()));
    RatMatrix bb(e1 + e2, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < e1; ++i) bb(i, j) = a.index.b(i, j);
        for (std::size_t i = 0; i < e2; ++i) bb(e1 + i, j) = b.index.b(i, j);
    }
    JacobiIndex idx{n ? a.index.m + b.index.m : RatMatrix(), bb};
    JacobiExpansion r(group, a.weight + b.weight, a.dual, idx, product_prec(a.prec, a.floor(), b.prec, b.floor()),
                      a.weak_bound + b.weak_bound);
    const auto pm = pair_map(*a.group, *b.group, *group);
    for (const auto& [k1, c1] : a.coeffs)
        for (const auto& [k2, c2] : b.coeffs) {
            Rational nn = k1.n + k2.n;
            if (nn < r.prec) r.add(nn, k1.r + k2.r, pm[k1.gamma * b.group->order() + k2.gamma], c1 * c2);
        }
    return r;
}

bool jacobi_equal(const JacobiExpansion& a, const JacobiExpansion& b) {
    return a.group->gram() == b.group->gram() && a.weight == b.weight && a.dual == b.dual &&
           a.index.m == b.index.m && a.index.b == b.index.b && a.prec == b.prec && a.weak_bound == b.weak_bound &&
           a.coeffs == b.coeffs;
}

// ---------------------------------------------------------------------------
// validation

SupportReport validate_support(const VVExpansion& f) {
    SupportReport rep;
    for (const auto& [k, c] : f.coeffs) {
        if (k.gamma >= f.group->order()) {
            rep.violations.push_back("component index out of range");
            continue;
        }
        if (!f.in_class(k.n, k.gamma))
            rep.violations.push_back("(i): n = " + k.n.str() + " not in the class of " +
                                     to_string(f.group->element(k.gamma)));
        if (k.n >= f.prec) rep.violations.push_back("n = " + k.n.str() + " beyond precision");
    }
    return rep;
}

SupportReport validate_support(const JacobiExpansion& phi) {
    SupportReport rep;
    const auto& s = phi.group->gram();
    const std::size_t n = phi.n_vars();
    if (n > 0) {
        try {
            validate_index(s, phi.index);
        } catch (const IndexError& e) {
            rep.violations.push_back(std::string("(ii): ") + e.what());
        }
    }
    const RatMatrix bts = s.size() ? phi.index.b.transpose() * s.rational() : RatMatrix(n, 0);
    for (const auto& [k, c] : phi.coeffs) {
        const std::string where = " at (n=" + k.n.str() + ", r=" + to_string(k.r) + ", gamma=" +
                                  (k.gamma < phi.group->order() ? to_string(phi.group->element(k.gamma)) : "?") + ")";
        if (k.gamma >= phi.group->order() || k.r.size() != n) {
            rep.violations.push_back("malformed key" + where);
            continue;
        }
        const Rational& q = phi.group->q(k.gamma).value();
        if (!(phi.dual ? k.n + q : k.n - q).is_integer()) rep.violations.push_back("(i): exponent class" + where);
        RatVec shift = s.size() ? bts * phi.group->element(k.gamma) : RatVec(n);
        if (!is_integral(phi.dual ? k.r + shift : k.r - shift)) rep.violations.push_back("(iii): r support" + where);
        if (Rational(4) * k.n - phi.norm(k.r) < Rational(-4) * phi.weak_bound)
            rep.violations.push_back("discriminant bound" + where);
        if (k.n >= phi.prec) rep.violations.push_back("beyond precision" + where);
    }
    return rep;
}

std::string to_string(Symmetry s) {
    switch (s) {
        case Symmetry::Symmetric: return "symmetric";
        case Symmetry::Antisymmetric: return "antisymmetric";
        case Symmetry::Neither: return "neither";
        case Symmetry::Both: return "both";
    }
    return "?";
}

int expected_symmetry_sign(const Rational& weight, int signature, bool dual) {
    Rational x = dual ? weight + Rational(signature, 2) : weight - Rational(signature, 2);
    if (!x.is_integer()) throw DomainError("weight " + weight.str() + " with signature " + std::to_string(signature) +
                                           " admits no nonzero forms");
    return x.num() % 2 == 0 ? 1 : -1;
}

namespace {

template <typename Map, typename Partner>
Symmetry classify(const Map& coeffs, Partner partner) {
    bool sym = true, anti = true;
    for (const auto& [k, c] : coeffs) {
        Rational other = partner(k);
        if (other != c) sym = false;
        if (other != -c) anti = false;
        if (!sym && !anti) return Symmetry::Neither;
    }
    if (sym && anti) return Symmetry::Both;
    return sym ? Symmetry::Symmetric : Symmetry::Antisymmetric;
}

}  // namespace

Symmetry symmetry_check(const VVExpansion& f) {
    expected_symmetry_sign(f.weight, f.group->signature(), f.dual);
    return classify(f.coeffs, [&](const VVKey& k) { return f.coeff(k.n, f.group->negate(k.gamma)); });
}

Symmetry symmetry_check(const JacobiExpansion& phi) {
    expected_symmetry_sign(phi.weight, phi.group->signature(), phi.dual);
    return classify(phi.coeffs, [&](const JKey& k) {
        return phi.coeff(k.n, Rational(-1) * k.r, phi.group->negate(k.gamma));
    });
}

// ---------------------------------------------------------------------------
// scalar series

ScalarQSeries s_add(const ScalarQSeries& a, const ScalarQSeries& b) {
    ScalarQSeries r = a.truncated(std::min(a.prec, b.prec));
    r.denom = std::lcm(a.denom, b.denom);
    for (const auto& [e, c] : b.coeffs)
        if (e < r.prec) r.add(e, c);
    return r;
}

ScalarQSeries s_scale(const ScalarQSeries& a, const Rational& c) {
    ScalarQSeries r(a.denom, a.prec);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : a.coeffs) r.coeffs.emplace(e, c * v);
    return r;
}

ScalarQSeries s_mul(const ScalarQSeries& a, const ScalarQSeries& b) {
    ScalarQSeries r(std::lcm(a.denom, b.denom), product_prec(a.prec, a.floor(), b.prec, b.floor()));
    for (const auto& [e1, c1] : a.coeffs)
        for (const auto& [e2, c2] : b.coeffs) {
            Rational e = e1 + e2;
            if (e < r.prec) r.add(e, c1 * c2);
        }
    return r;
}

ScalarQSeries s_rescale_q(const ScalarQSeries& a, const Rational& s) {
    if (s.sign() <= 0) throw DomainError("q-rescaling factor must be positive");
    const Integer full = Integer(a.denom) * s.den();
    const Integer d = full / gcd(s.num(), full);
    ScalarQSeries r(to_long(d), a.prec * s);
    for (const auto& [e, c] : a.coeffs) r.coeffs.emplace(e * s, c);
    return r;
}

ScalarQSeries s_restrict_integer(const ScalarQSeries& a) {
    ScalarQSeries r(1, a.prec);
    for (const auto& [e, c] : a.coeffs)
        if (e.is_integer()) r.coeffs.emplace(e, c);
    return r;
}

ScalarQSeries s_halve_on_residues(const ScalarQSeries& a, long modulus, const std::vector<long>& residues) {
    if (modulus < 1) throw DomainError("modulus must be positive");
    ScalarQSeries r = a;
    for (auto& [e, c] : r.coeffs) {
        if (!e.is_integer()) continue;
        Integer m = e.num() % modulus;
        if (m < 0) m += modulus;
        if (std::find(residues.begin(), residues.end(), m.get_si()) != residues.end()) c = c / Rational(2);
    }
    return r;
}

bool s_agree(const ScalarQSeries& a, const ScalarQSeries& b) {
    const Rational p = std::min(a.prec, b.prec);
    return a.truncated(p).coeffs == b.truncated(p).coeffs;
}

// ---------------------------------------------------------------------------
// serialization

using nlohmann::json;

namespace {

json rat_vec_json(const RatVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

json rat_matrix_json(const RatMatrix& m) {
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        a.push_back(row);
    }
    return a;
}

json gram_json(const GramMatrix& g) {
    json a = json::array();
    for (std::size_t i = 0; i < g.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < g.size(); ++j) row.push_back(json::parse(g(i, j).get_str()));
        a.push_back(row);
    }
    return a;
}

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError(where + ": " + what);
}

const json& field(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) fail(where, "missing field '" + key + "'");
    return obj.at(key);
}

Rational rat_of(const json& v, const std::string& where) {
    try {
        if (v.is_string()) return Rational::parse(v.get<std::string>());
        if (v.is_number_integer()) return Rational(v.get<long>());
    } catch (const ParseError& e) {
        fail(where, e.what());
    }
    fail(where, "expected a rational string");
}

RatVec rat_vec_of(const json& v, const std::string& where) {
    if (!v.is_array()) fail(where, "expected an array");
    RatVec r;
    for (std::size_t i = 0; i < v.size(); ++i) r.push_back(rat_of(v[i], where + "[" + std::to_string(i) + "]"));
    return r;
}

RatMatrix rat_matrix_of(const json& v, const std::string& where, std::size_t rows_if_empty = 0) {
    if (!v.is_array()) fail(where, "expected a nested array");
    if (v.empty()) return RatMatrix(rows_if_empty, 0);
    const std::size_t cols = v[0].is_array() ? v[0].size() : 0;
    RatMatrix m(v.size(), cols);
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::string w = where + "[" + std::to_string(i) + "]";
        if (!v[i].is_array() || v[i].size() != cols) fail(w, "ragged matrix row");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rat_of(v[i][j], w + "[" + std::to_string(j) + "]");
    }
    return m;
}

GramMatrix gram_of(const json& v, const std::string& where) {
    if (!v.is_array()) fail(where, "expected a nested integer array");
    const std::size_t n = v.size();
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!v[i].is_array() || v[i].size() != n) fail(where, "Gram matrix must be square");
        for (std::size_t j = 0; j < n; ++j) {
            const json& x = v[i][j];
            if (x.is_number_integer()) m(i, j) = Integer(x.dump());
            else if (x.is_string()) {
                Rational r = rat_of(x, where);
                if (!r.is_integer()) fail(where, "Gram entries must be integers");
                m(i, j) = r.num();
            } else {
                fail(where, "Gram entries must be integers");
            }
        }
    }
    try {
        return GramMatrix(std::move(m));
    } catch (const DomainError& e) {
        fail(where, e.what());
    }
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

std::size_t gamma_of(const json& v, const DiscriminantGroup& g, const std::string& where) {
    RatVec coords = rat_vec_of(v, where);
    if (coords.size() != g.dim()) fail(where, "gamma has the wrong length");
    auto i = g.find(coords);
    if (!i) fail(where, to_string(coords) + " is not in the dual lattice");
    return *i;
}

std::string kind_of(const json& j) {
    const json& k = field(j, "kind", "$");
    if (!k.is_string()) fail("$.kind", "expected a string");
    return k.get<std::string>();
}

bool bool_of(const json& v, const std::string& where) {
    if (!v.is_boolean()) fail(where, "expected a boolean");
    return v.get<bool>();
}

json vv_json(const VVExpansion& f) {
    json j;
    j["kind"] = "vvform";
    j["gram"] = gram_json(f.group->gram());
    j["dual"] = f.dual;
    j["weight"] = f.weight.str();
    j["prec"] = f.prec.str();
    json cs = json::array();
    for (const auto& [k, c] : f.coeffs)
        cs.push_back({{"n", k.n.str()}, {"gamma", rat_vec_json(f.group->element(k.gamma))}, {"c", c.str()}});
    j["coeffs"] = cs;
    return j;
}

json jacobi_json(const JacobiExpansion& phi) {
    json j;
    j["kind"] = "jacobi";
    j["gram"] = gram_json(phi.group->gram());
    j["dual"] = phi.dual;
    j["weight"] = phi.weight.str();
    j["index_m"] = rat_matrix_json(phi.index.m);
    j["index_b"] = rat_matrix_json(phi.index.b);
    j["weak_bound"] = phi.weak_bound.str();
    j["prec"] = phi.prec.str();
    json cs = json::array();
    for (const auto& [k, c] : phi.coeffs)
        cs.push_back({{"n", k.n.str()},
                      {"r", rat_vec_json(k.r)},
                      {"gamma", rat_vec_json(phi.group->element(k.gamma))},
                      {"c", c.str()}});
    j["coeffs"] = cs;
    return j;
}

json scalar_json(const ScalarQSeries& s) {
    json j;
    j["kind"] = "qseries";
    j["denom"] = s.denom;
    j["prec"] = s.prec.str();
    json cs = json::array();
    for (const auto& [e, c] : s.coeffs) cs.push_back({e.str(), c.str()});
    j["coeffs"] = cs;
    return j;
}

template <typename Setter>
void read_coeffs(const json& j, Setter set) {
    const json& cs = field(j, "coeffs", "$");
    if (!cs.is_array()) fail("$.coeffs", "expected an array");
    for (std::size_t i = 0; i < cs.size(); ++i) {
        const std::string where = "$.coeffs[" + std::to_string(i) + "]";
        try {
            set(cs[i], where);
        } catch (const ParseError&) {
            throw;
        } catch (const DomainError& e) {
            fail(where, e.what());
        }
    }
}

VVExpansion vv_of(const json& j) {
    auto group = discriminant_group(gram_of(field(j, "gram", "$"), "$.gram"));
    VVExpansion f(group, rat_of(field(j, "weight", "$"), "$.weight"), bool_of(field(j, "dual", "$"), "$.dual"),
                  rat_of(field(j, "prec", "$"), "$.prec"));
    read_coeffs(j, [&](const json& c, const std::string& w) {
        const Rational n = rat_of(field(c, "n", w), w + ".n");
        const std::size_t g = gamma_of(field(c, "gamma", w), *group, w + ".gamma");
        if (f.coeffs.count(VVKey{n, g})) fail(w, "duplicate coefficient");
        f.set(n, g, rat_of(field(c, "c", w), w + ".c"));
    });
    return f;
}

JacobiExpansion jacobi_of(const json& j) {
    auto group = discriminant_group(gram_of(field(j, "gram", "$"), "$.gram"));
    JacobiIndex idx{rat_matrix_of(field(j, "index_m", "$"), "$.index_m"),
                    rat_matrix_of(field(j, "index_b", "$"), "$.index_b", group->dim())};
    JacobiExpansion phi;
    try {
        phi = JacobiExpansion(group, rat_of(field(j, "weight", "$"), "$.weight"), bool_of(field(j, "dual", "$"), "$.dual"),
                              idx, rat_of(field(j, "prec", "$"), "$.prec"),
                              j.contains("weak_bound") ? rat_of(j.at("weak_bound"), "$.weak_bound") : Rational(0));
    } catch (const DomainError& e) {
        fail("$.index", e.what());
    }
    read_coeffs(j, [&](const json& c, const std::string& w) {
        const Rational n = rat_of(field(c, "n", w), w + ".n");
        const RatVec r = rat_vec_of(field(c, "r", w), w + ".r");
        const std::size_t g = gamma_of(field(c, "gamma", w), *group, w + ".gamma");
        if (phi.coeffs.count(JKey{n, g, r})) fail(w, "duplicate coefficient");
        phi.set(n, r, g, rat_of(field(c, "c", w), w + ".c"));
    });
    return phi;
}

ScalarQSeries scalar_of(const json& j) {
    const json& d = field(j, "denom", "$");
    if (!d.is_number_integer() || d.get<long>() < 1) fail("$.denom", "expected a positive integer");
    ScalarQSeries s(d.get<long>(), rat_of(field(j, "prec", "$"), "$.prec"));
    read_coeffs(j, [&](const json& c, const std::string& w) {
        if (!c.is_array() || c.size() != 2) fail(w, "expected [exponent, coefficient]");
        const Rational e = rat_of(c[0], w + "[0]");
        if (s.coeffs.count(e)) fail(w, "duplicate coefficient");
        s.set(e, rat_of(c[1], w + "[1]"));
    });
    return s;
}

}  // namespace

std::string serialize(const VVExpansion& f) { return vv_json(f).dump(); }
std::string serialize(const JacobiExpansion& phi) { return jacobi_json(phi).dump(); }
std::string serialize(const ScalarQSeries& s) { return scalar_json(s).dump(); }

std::string serialize(const AnyExpansion& x) {
    return std::visit([](const auto& v) { return serialize(v); }, x);
}

AnyExpansion deserialize(const std::string& text) {
    const json j = parse_json(text);
    const std::string kind = kind_of(j);
    if (kind == "vvform") return vv_of(j);
    if (kind == "jacobi") return jacobi_of(j);
    if (kind == "qseries") return scalar_of(j);
    fail("$.kind", "unknown kind '" + kind + "'");
}

VVExpansion deserialize_vv(const std::string& text) {
    AnyExpansion x = deserialize(text);
    if (auto* f = std::get_if<VVExpansion>(&x)) return std::move(*f);
    throw ParseError("$.kind: expected a vvform");
}

JacobiExpansion deserialize_jacobi(const std::string& text) {
    AnyExpansion x = deserialize(text);
    if (auto* f = std::get_if<JacobiExpansion>(&x)) return std::move(*f);
    throw ParseError("$.kind: expected a jacobi form");
}

ScalarQSeries deserialize_scalar(const std::string& text) {
    AnyExpansion x = deserialize(text);
    if (auto* f = std::get_if<ScalarQSeries>(&x)) return std::move(*f);
    throw ParseError("$.kind: expected a qseries");
}

GramMatrix parse_gram(const std::string& text) { return gram_of(parse_json(text), "gram"); }

RatMatrix parse_rat_matrix(const std::string& text) { return rat_matrix_of(parse_json(text), "matrix"); }

}  // namespace weiljac
