#include "inertia/mpoly.hpp"

#include <algorithm>

#include "inertia/error.hpp"

namespace inertia {

namespace {

std::vector<std::vector<Scalar>> power_tables(const std::vector<Scalar>& base,
                                              const std::vector<std::uint32_t>& max_exp) {
    std::vector<std::vector<Scalar>> tables(base.size());
    for (std::size_t j = 0; j < base.size(); ++j) {
        tables[j].reserve(max_exp[j] + 1);
        tables[j].push_back(Scalar::one(base[j].field()));
        for (std::uint32_t e = 1; e <= max_exp[j]; ++e)
            tables[j].push_back(tables[j].back() * base[j]);
    }
    return tables;
}

} // namespace

MPoly::MPoly(Field field, std::size_t nvars)
    : field_(field), nvars_(nvars), declared_degree_(nvars, 0) {
    if (nvars_ == 0) throw structural_error("polynomial needs at least one variable");
}

MPoly MPoly::constant(const Field& f, std::size_t nvars, const Scalar& c) {
    if (c.field() != f) throw structural_error("constant scalar field mismatch");
    MPoly p(f, nvars);
    if (!c.is_zero()) p.terms_.emplace(Exps(nvars, 0), c);
    return p;
}

MPoly MPoly::variable(const Field& f, std::size_t nvars, std::size_t var) {
    if (var >= nvars) throw structural_error("variable index out of range");
    MPoly p(f, nvars);
    Exps e(nvars, 0);
    e[var] = 1;
    p.terms_.emplace(std::move(e), Scalar::one(f));
    p.declared_degree_[var] = 1;
    return p;
}

MPoly MPoly::from_terms(const Field& f, std::size_t nvars,
                        const std::vector<std::pair<Exps, Scalar>>& terms) {
    MPoly p(f, nvars);
    for (const auto& [e, c] : terms) {
        if (e.size() != nvars) throw structural_error("exponent vector length mismatch");
        if (c.field() != f) throw structural_error("term coefficient field mismatch");
        p.insert_term(e, c);
    }
    p.recompute_min_declared();
    return p;
}

bool MPoly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == Exps(nvars_, 0));
}

std::uint32_t MPoly::max_exponent(std::size_t var) const {
    std::uint32_t m = 0;
    for (const auto& [e, c] : terms_) m = std::max(m, e[var]);
    return m;
}

MPoly MPoly::with_declared_degree(std::vector<std::uint32_t> d) const {
    if (d.size() != nvars_) throw structural_error("declared degree length mismatch");
    for (std::size_t j = 0; j < nvars_; ++j)
        if (d[j] < max_exponent(j))
            throw structural_error("declared degree below actual exponent of variable " +
                                   std::to_string(j));
    MPoly p = *this;
    p.declared_degree_ = std::move(d);
    return p;
}

void MPoly::check_compatible(const MPoly& o) const {
    if (field_ != o.field_)
        throw structural_error("mixed fields: " + field_.to_string() + " vs " +
                               o.field_.to_string());
    if (nvars_ != o.nvars_)
        throw structural_error("mixed variable counts: " + std::to_string(nvars_) + " vs " +
                               std::to_string(o.nvars_));
}

void MPoly::insert_term(const Exps& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        Scalar s = it->second + c;
        if (s.is_zero())
            terms_.erase(it);
        else
            it->second = std::move(s);
    }
}

void MPoly::recompute_min_declared() {
    for (std::size_t j = 0; j < nvars_; ++j)
        declared_degree_[j] = std::max(declared_degree_[j], max_exponent(j));
}

MPoly MPoly::operator+(const MPoly& o) const {
    check_compatible(o);
    MPoly r = *this;
    for (std::size_t j = 0; j < nvars_; ++j)
        r.declared_degree_[j] = std::max(declared_degree_[j], o.declared_degree_[j]);
    for (const auto& [e, c] : o.terms_) r.insert_term(e, c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
    check_compatible(o);
    MPoly r(field_, nvars_);
    for (std::size_t j = 0; j < nvars_; ++j)
        r.declared_degree_[j] = declared_degree_[j] + o.declared_degree_[j];

    // Accumulate sum_{tb in small} shift(large, tb). A constant exponent
    // shift preserves lexicographic term order, so each partial product is
    // already sorted and folds in with a two-pointer merge instead of per-term
    // tree inserts.
    const MPoly& small = terms_.size() <= o.terms_.size() ? *this : o;
    const MPoly& large = terms_.size() <= o.terms_.size() ? o : *this;
    std::vector<std::pair<Exps, Scalar>> acc;
    std::vector<std::pair<Exps, Scalar>> next;
    Exps key(nvars_, 0);
    for (const auto& [eb, cb] : small.terms_) {
        next.clear();
        next.reserve(acc.size() + large.terms_.size());
        auto it = acc.begin();
        for (const auto& [ea, ca] : large.terms_) {
            for (std::size_t j = 0; j < nvars_; ++j) key[j] = ea[j] + eb[j];
            Scalar prod = ca * cb;
            while (it != acc.end() && it->first < key) next.push_back(std::move(*it++));
            if (it != acc.end() && it->first == key) {
                Scalar s = std::move(it->second) + prod;
                ++it;
                if (!s.is_zero()) next.emplace_back(key, std::move(s));
            } else if (!prod.is_zero()) {
                next.emplace_back(key, std::move(prod));
            }
        }
        while (it != acc.end()) next.push_back(std::move(*it++));
        acc.swap(next);
    }
    r.terms_ = std::map<Exps, Scalar>(std::make_move_iterator(acc.begin()),
                                      std::make_move_iterator(acc.end()));
    return r;
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MPoly MPoly::operator*(const Scalar& c) const {
    if (c.field() != field_) throw structural_error("scalar multiplier field mismatch");
    MPoly r(field_, nvars_);
    r.declared_degree_ = declared_degree_;
    if (c.is_zero()) return r;
    for (const auto& [e, t] : terms_) r.terms_.emplace(e, t * c);
    return r;
}

MPoly operator*(const Scalar& c, const MPoly& p) { return p * c; }

bool MPoly::operator==(const MPoly& o) const {
    check_compatible(o);
    return terms_ == o.terms_;
}

Scalar MPoly::eval_affine(const std::vector<Scalar>& x) const {
    if (x.size() != nvars_) throw structural_error("evaluation point length mismatch");
    std::vector<std::uint32_t> max_exp(nvars_);
    for (std::size_t j = 0; j < nvars_; ++j) {
        if (x[j].field() != field_) throw structural_error("evaluation point field mismatch");
        max_exp[j] = max_exponent(j);
    }
    auto pw = power_tables(x, max_exp);
    Scalar acc = Scalar::zero(field_);
    for (const auto& [e, c] : terms_) {
        Scalar t = c;
        for (std::size_t j = 0; j < nvars_; ++j)
            if (e[j]) t = t * pw[j][e[j]];
        acc = acc + t;
    }
    return acc;
}

Scalar MPoly::eval_projective(const Point& p) const {
    if (p.size() != nvars_) throw structural_error("point coordinate count mismatch");
    if (p.field() != field_) throw structural_error("point field mismatch");
    std::vector<Scalar> us, vs;
    us.reserve(nvars_);
    vs.reserve(nvars_);
    for (std::size_t j = 0; j < nvars_; ++j) {
        us.push_back(p.coord(j).u);
        vs.push_back(p.coord(j).v);
    }
    auto upw = power_tables(us, declared_degree_);
    auto vpw = power_tables(vs, declared_degree_);
    Scalar acc = Scalar::zero(field_);
    for (const auto& [e, c] : terms_) {
        Scalar t = c;
        for (std::size_t j = 0; j < nvars_; ++j) {
            t = t * upw[j][declared_degree_[j] - e[j]];
            t = t * vpw[j][e[j]];
        }
        acc = acc + t;
    }
    return acc;
}

Scalar MPoly::eval_projective_partial(const Point& p, std::size_t var, bool wrt_v) const {
    if (p.size() != nvars_) throw structural_error("point coordinate count mismatch");
    if (p.field() != field_) throw structural_error("point field mismatch");
    if (var >= nvars_) throw structural_error("partial variable index out of range");
    std::vector<Scalar> us, vs;
    for (std::size_t j = 0; j < nvars_; ++j) {
        us.push_back(p.coord(j).u);
        vs.push_back(p.coord(j).v);
    }
    auto upw = power_tables(us, declared_degree_);
    auto vpw = power_tables(vs, declared_degree_);
    Scalar acc = Scalar::zero(field_);
    for (const auto& [e, c] : terms_) {
        std::uint32_t ue = declared_degree_[var] - e[var];
        std::uint32_t ve = e[var];
        std::uint32_t mult = wrt_v ? ve : ue;
        if (mult == 0) continue;
        Scalar t = c * Scalar::from_int(field_, mult);
        for (std::size_t j = 0; j < nvars_; ++j) {
            std::uint32_t uj = declared_degree_[j] - e[j];
            std::uint32_t vj = e[j];
            if (j == var) {
                if (wrt_v)
                    --vj;
                else
                    --uj;
            }
            t = t * upw[j][uj];
            t = t * vpw[j][vj];
        }
        acc = acc + t;
    }
    return acc;
}

Scalar MPoly::content() const {
    if (field_.is_fp() || terms_.empty()) return Scalar::one(field_);
    BigInt g = 0, l = 1;
    for (const auto& [e, c] : terms_) {
        g = gcd(g, BigInt(abs(numerator(c.rat()))));
        l = lcm(l, denominator(c.rat()));
    }
    return Scalar::rational(BigRational(g, l));
}

Exps MPoly::min_exponents() const {
    Exps m(nvars_, 0);
    if (terms_.empty()) return m;
    m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (std::size_t j = 0; j < nvars_; ++j) m[j] = std::min(m[j], e[j]);
    return m;
}

MPoly MPoly::divided_by_monomial(const Exps& m) const {
    if (m.size() != nvars_) throw structural_error("monomial exponent length mismatch");
    MPoly r(field_, nvars_);
    for (std::size_t j = 0; j < nvars_; ++j) {
        if (declared_degree_[j] < m[j])
            throw structural_error("monomial divisor exceeds declared degree");
        r.declared_degree_[j] = declared_degree_[j] - m[j];
    }
    for (const auto& [e, c] : terms_) {
        Exps q(nvars_);
        for (std::size_t j = 0; j < nvars_; ++j) {
            if (e[j] < m[j]) throw structural_error("term not divisible by monomial");
            q[j] = e[j] - m[j];
        }
        r.terms_.emplace(std::move(q), c);
    }
    return r;
}

std::string MPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        for (std::size_t j = 0; j < nvars_; ++j) {
            if (e[j] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(j + 1);
            if (e[j] > 1) mono += "^" + std::to_string(e[j]);
        }
        std::string cs = c.to_string();
        std::string term;
        if (mono.empty())
            term = cs;
        else if (cs == "1")
            term = mono;
        else if (cs == "-1")
            term = "-" + mono;
        else
            term = cs + "*" + mono;
        if (s.empty()) {
            s = term;
        } else if (!term.empty() && term[0] == '-') {
            s += " - " + term.substr(1);
        } else {
            s += " + " + term;
        }
    }
    return s;
}

MPoly scalar_normal_form(const MPoly& p) {
    if (p.is_zero()) return p;
    MPoly r = p;
    if (p.field().is_q()) {
        Scalar c = p.content();
        if (!c.is_one()) r = r * c.inverse();
    }
    Exps m = r.min_exponents();
    bool trivial = true;
    for (std::uint32_t e : m) trivial = trivial && e == 0;
    if (!trivial) r = r.divided_by_monomial(m);
    return r;
}

} // namespace inertia
