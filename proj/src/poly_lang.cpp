#include "varietylab/poly_lang.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <set>

#include "varietylab/caps.hpp"
#include "varietylab/error.hpp"

namespace vlab {

MonPtr mon_var(int index) {
    if (index < 0)
        throw error("variable index must be nonnegative");
    auto m = std::make_shared<Monomial>();
    m->var = index;
    return m;
}

MonPtr mon_mul(MonPtr a, MonPtr b) {
    auto m = std::make_shared<Monomial>();
    m->l = std::move(a);
    m->r = std::move(b);
    return m;
}

bool mon_equal(const MonPtr &a, const MonPtr &b) {
    if (a.get() == b.get())
        return true;
    if (a->is_leaf() != b->is_leaf())
        return false;
    if (a->is_leaf())
        return a->var == b->var;
    return mon_equal(a->l, b->l) && mon_equal(a->r, b->r);
}

std::string mon_to_string(const MonPtr &m) {
    if (m->is_leaf())
        return "x" + std::to_string(m->var + 1);
    return "(" + mon_to_string(m->l) + " " + mon_to_string(m->r) + ")";
}

std::size_t mon_degree(const MonPtr &m) {
    if (m->is_leaf())
        return 1;
    return mon_degree(m->l) + mon_degree(m->r);
}

namespace {

void collect_leaves(const MonPtr &m, const std::function<void(int)> &fn) {
    if (m->is_leaf()) {
        fn(m->var);
        return;
    }
    collect_leaves(m->l, fn);
    collect_leaves(m->r, fn);
}

int max_var(const MonPtr &m) {
    int mx = -1;
    collect_leaves(m, [&](int v) { mx = std::max(mx, v); });
    return mx;
}

} // namespace

std::vector<std::size_t> mon_multidegree(const MonPtr &m, std::size_t nvars) {
    std::vector<std::size_t> d(nvars, 0);
    collect_leaves(m, [&](int v) {
        if (std::size_t(v) < nvars)
            ++d[v];
    });
    return d;
}

std::size_t mon_depth(const MonPtr &m) {
    if (m->is_leaf())
        return 0;
    return std::max(mon_depth(m->l), mon_depth(m->r)) + 1;
}

std::vector<int> mon_content(const MonPtr &m) {
    std::set<int> s;
    collect_leaves(m, [&](int v) { s.insert(v); });
    return std::vector<int>(s.begin(), s.end());
}

MonomialStats monomial_stats(const MonPtr &m, std::size_t nvars) {
    MonomialStats st;
    st.degree = mon_degree(m);
    st.multidegree = mon_multidegree(m, nvars);
    st.depth = mon_depth(m);
    st.content = mon_content(m);
    return st;
}

NAPoly make_poly(const Field &F, std::vector<std::pair<fel, MonPtr>> terms) {
    // Merge like monomials (keyed by canonical text) and drop zeros.
    std::map<std::string, std::pair<fel, MonPtr>> acc;
    for (auto &[c, m] : terms) {
        std::string key = mon_to_string(m);
        auto it = acc.find(key);
        if (it == acc.end())
            acc.emplace(key, std::make_pair(c, m));
        else
            it->second.first = F.add(it->second.first, c);
    }
    NAPoly p;
    p.field_q = F.q();
    for (auto &[key, cm] : acc)
        if (cm.first != 0)
            p.terms.push_back(cm);
    std::sort(p.terms.begin(), p.terms.end(),
              [](const auto &a, const auto &b) {
                  std::size_t da = mon_degree(a.second), db = mon_degree(b.second);
                  if (da != db)
                      return da < db;
                  return mon_to_string(a.second) < mon_to_string(b.second);
              });
    int mx = -1;
    for (auto &[c, m] : p.terms)
        mx = std::max(mx, max_var(m));
    p.nvars = std::size_t(mx + 1);
    return p;
}

NAPoly poly_add(const Field &F, const NAPoly &a, const NAPoly &b) {
    std::vector<std::pair<fel, MonPtr>> terms = a.terms;
    terms.insert(terms.end(), b.terms.begin(), b.terms.end());
    return make_poly(F, std::move(terms));
}

NAPoly poly_mul(const Field &F, const NAPoly &a, const NAPoly &b) {
    std::vector<std::pair<fel, MonPtr>> terms;
    for (const auto &[ca, ma] : a.terms)
        for (const auto &[cb, mb] : b.terms)
            terms.push_back({F.mul(ca, cb), mon_mul(ma, mb)});
    return make_poly(F, std::move(terms));
}

std::string poly_to_string(const NAPoly &p) {
    if (p.terms.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < p.terms.size(); ++i) {
        if (i)
            out += " + ";
        if (p.terms[i].first != 1)
            out += std::to_string(int(p.terms[i].first)) + " ";
        out += mon_to_string(p.terms[i].second);
    }
    return out;
}

namespace {

struct Parser {
    const Field &F;
    const std::string &s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size()) {
            if (std::isspace(static_cast<unsigned char>(s[pos]))) {
                ++pos;
            } else if (s[pos] == '#') {
                while (pos < s.size() && s[pos] != '\n')
                    ++pos;
            } else {
                break;
            }
        }
    }

    bool done() {
        skip_ws();
        return pos >= s.size();
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string &msg) {
        throw error("polynomial syntax error at position " +
                    std::to_string(pos) + ": " + msg);
    }

    long long number() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected a number");
        long long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > 1'000'000'000)
                fail("number too large");
            ++pos;
        }
        return v;
    }

    NAPoly primary() {
        char c = peek();
        if (c == 'x') {
            ++pos;
            long long idx = number();
            if (idx < 1)
                fail("variable indices start at x1");
            return make_poly(F, {{fel(1), mon_var(int(idx - 1))}});
        }
        if (c == '(') {
            ++pos;
            NAPoly p = poly();
            if (peek() != ')')
                fail("expected ')'");
            ++pos;
            return p;
        }
        fail("expected a variable or '('");
    }

    NAPoly factor() {
        NAPoly p = primary();
        if (peek() == '^') {
            ++pos;
            long long e = number();
            if (e < 1)
                fail("exponent must be at least 1");
            NAPoly r = p;
            for (long long i = 1; i < e; ++i)
                r = poly_mul(F, r, p);
            return r;
        }
        return p;
    }

    bool at_factor_start() {
        char c = peek();
        return c == 'x' || c == '(';
    }

    NAPoly term() {
        skip_ws();
        fel coeff = 1;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            coeff = F.from_int(number());
        if (!at_factor_start())
            fail("a term needs at least one variable (constants are not allowed)");
        NAPoly p = factor();
        while (at_factor_start())
            p = poly_mul(F, p, factor());
        if (coeff != 1) {
            std::vector<std::pair<fel, MonPtr>> terms;
            for (auto &[c, m] : p.terms)
                terms.push_back({F.mul(coeff, c), m});
            p = make_poly(F, std::move(terms));
        }
        return p;
    }

    NAPoly poly() {
        bool negate = false;
        if (peek() == '-') {
            ++pos;
            negate = true;
        }
        NAPoly acc = term();
        if (negate)
            acc = negated(acc);
        for (;;) {
            char c = peek();
            if (c != '+' && c != '-')
                break;
            ++pos;
            NAPoly t = term();
            acc = poly_add(F, acc, c == '-' ? negated(t) : t);
        }
        return acc;
    }

    NAPoly negated(const NAPoly &p) {
        std::vector<std::pair<fel, MonPtr>> terms;
        for (auto &[c, m] : p.terms)
            terms.push_back({F.neg(c), m});
        return make_poly(F, std::move(terms));
    }
};

} // namespace

NAPoly parse_poly(const Field &F, const std::string &text) {
    Parser p{F, text};
    if (p.done())
        p.fail("empty polynomial");
    NAPoly out = p.poly();
    if (!p.done())
        p.fail("unexpected trailing input");
    return out;
}

namespace {

Vec eval_monomial(const MonPtr &m, const Algebra &A,
                  const std::vector<Vec> &assignment) {
    if (m->is_leaf()) {
        if (std::size_t(m->var) >= assignment.size())
            throw error("assignment does not cover variable x" +
                        std::to_string(m->var + 1));
        return assignment[m->var];
    }
    return alg_mul(A, eval_monomial(m->l, A, assignment),
                   eval_monomial(m->r, A, assignment));
}

void check_field(const Algebra &A, const NAPoly &p) {
    if (p.field_q != 0 && p.field_q != A.F.q())
        throw error("polynomial and algebra are over different fields");
}

// Iterate over all assignments of |A|^nvars tuples; fn gets the current
// assignment and returns false to stop early. Enforces the evaluation cap.
void for_each_tuple(const Algebra &A, std::size_t nvars,
                    const std::function<bool(const std::vector<Vec> &)> &fn) {
    Caps caps = Caps::from_env();
    double bits = double(nvars) * double(A.m) * std::log2(double(A.F.q()));
    if (bits > std::log2(double(caps.tuple_eval)))
        throw cap_exceeded(
            "identity check needs |A|^nvars <= " +
            std::to_string(caps.tuple_eval) + " (set VARIETYLAB_CAP to override)");
    std::vector<Vec> assignment(nvars, Vec(A.m, 0));
    const fel top = fel(A.F.q() - 1);
    for (;;) {
        if (!fn(assignment))
            return;
        // Odometer over the concatenated coordinates.
        std::size_t v = 0, i = 0;
        for (; v < nvars; ++v) {
            for (i = 0; i < A.m; ++i) {
                if (assignment[v][i] == top) {
                    assignment[v][i] = 0;
                } else {
                    assignment[v][i] = fel(assignment[v][i] + 1);
                    break;
                }
            }
            if (i < A.m)
                break;
        }
        if (v == nvars)
            return;
    }
}

} // namespace

Vec evaluate(const NAPoly &p, const Algebra &A,
             const std::vector<Vec> &assignment) {
    check_field(A, p);
    Vec acc(A.m, 0);
    for (const auto &[c, m] : p.terms)
        acc = vec_add(A.F, acc,
                      vec_scale(A.F, c, eval_monomial(m, A, assignment)));
    return acc;
}

bool is_identity(const Algebra &A, const NAPoly &p) {
    check_field(A, p);
    if (p.is_zero())
        return true;
    bool ok = true;
    for_each_tuple(A, p.nvars, [&](const std::vector<Vec> &assignment) {
        ok = vec_is_zero(evaluate(p, A, assignment));
        return ok;
    });
    return ok;
}

QuasiCheck check_quasi_identity(const Algebra &A, const QuasiIdentity &qi) {
    std::size_t nvars = qi.nvars;
    for (const NAPoly &p : qi.premises)
        nvars = std::max(nvars, p.nvars);
    nvars = std::max(nvars, qi.conclusion.nvars);
    QuasiCheck res;
    for_each_tuple(A, nvars, [&](const std::vector<Vec> &assignment) {
        for (const NAPoly &p : qi.premises)
            if (!vec_is_zero(evaluate(p, A, assignment)))
                return true;
        if (vec_is_zero(evaluate(qi.conclusion, A, assignment)))
            return true;
        res.holds = false;
        res.counterexample = assignment;
        return false;
    });
    return res;
}

Subspace verbal_ideal(const Algebra &A, const std::vector<NAPoly> &polys) {
    SpanBuilder sb(A.F, A.m);
    for (const NAPoly &p : polys) {
        check_field(A, p);
        if (p.is_zero())
            continue;
        for_each_tuple(A, p.nvars, [&](const std::vector<Vec> &assignment) {
            sb.add(evaluate(p, A, assignment));
            return sb.dim() < A.m;
        });
    }
    Subspace values = sb.subspace();
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < values.dim(); ++i)
        rows.push_back(values.basis.row(i));
    return ideal_generated(A, rows);
}

namespace {

// All binary trees over the leaf sequence lo..hi (inclusive), each leaf
// being the fixed variable at its position.
std::vector<MonPtr> bracketings(int lo, int hi) {
    std::vector<MonPtr> out;
    if (lo == hi) {
        out.push_back(mon_var(lo));
        return out;
    }
    for (int split = lo; split < hi; ++split)
        for (const MonPtr &l : bracketings(lo, split))
            for (const MonPtr &r : bracketings(split + 1, hi))
                out.push_back(mon_mul(l, r));
    return out;
}

} // namespace

std::vector<NAPoly> identity_family(IdentityFamily kind, std::size_t param) {
    Caps caps = Caps::from_env();
    // Every coefficient is 1, so these polynomials make sense over any
    // field; field_q is cleared below to mark them field-agnostic.
    Field F2(2);
    std::vector<NAPoly> out;
    switch (kind) {
    case IdentityFamily::nilpotent_class: {
        std::size_t c = param;
        if (c < 1)
            throw error("nilpotency class must be at least 1");
        if (c > 16)
            throw cap_exceeded("bracketing family too large");
        for (const MonPtr &m : bracketings(0, int(c)))
            out.push_back(make_poly(F2, {{fel(1), m}}));
        if (out.size() > caps.tuple_eval)
            throw cap_exceeded("bracketing family too large");
        break;
    }
    case IdentityFamily::nilpotent_depth: {
        std::size_t d = param;
        if (d < 1)
            throw error("nilpotent depth must be at least 1");
        if (d > 16)
            throw cap_exceeded("depth family too large");
        for (const MonPtr &m : bracketings(0, int(d)))
            if (mon_depth(m) == d)
                out.push_back(make_poly(F2, {{fel(1), m}}));
        break;
    }
    case IdentityFamily::solvable: {
        std::size_t l = param;
        if (l < 1)
            throw error("solvability level must be at least 1");
        if (l > 16)
            throw cap_exceeded("solvable polynomial too large");
        // s_l on variables x1..x_{2^l}, built bottom-up.
        std::function<MonPtr(std::size_t, int)> build =
            [&](std::size_t level, int base) -> MonPtr {
            if (level == 1)
                return mon_mul(mon_var(base), mon_var(base + 1));
            int half = 1 << (level - 1);
            return mon_mul(build(level - 1, base), build(level - 1, base + half));
        };
        out.push_back(make_poly(F2, {{fel(1), build(l, 0)}}));
        break;
    }
    }
    for (NAPoly &p : out)
        p.field_q = 0;
    return out;
}

bool solvable_identity_holds(const Algebra &A, std::size_t level) {
    if (level < 1)
        throw error("solvability level must be at least 1");
    // V_1 = all products ab; V_k = all products of two V_{k-1} values. The
    // variables of s_l are pairwise distinct, so its value set is exactly
    // V_l, and s_l = 0 holds iff V_l = {0}.
    std::set<Vec> cur;
    for_each_tuple(A, 2, [&](const std::vector<Vec> &t) {
        cur.insert(alg_mul(A, t[0], t[1]));
        return true;
    });
    for (std::size_t k = 2; k <= level; ++k) {
        std::set<Vec> next;
        for (const Vec &u : cur)
            for (const Vec &v : cur)
                next.insert(alg_mul(A, u, v));
        cur = std::move(next);
    }
    return cur.size() == 1 && vec_is_zero(*cur.begin());
}

namespace {

// Reduced multidegree: 0 for an absent variable, else 1 + ((d-1) mod (q-1)),
// so "absent" and "positive exponent divisible by q-1" stay distinct.
std::vector<std::size_t> reduced_profile(const Field &F, const MonPtr &m,
                                         std::size_t nvars) {
    std::vector<std::size_t> d = mon_multidegree(m, nvars);
    for (auto &x : d)
        if (x > 0)
            x = 1 + (x - 1) % std::size_t(F.q() - 1);
    return d;
}

} // namespace

std::vector<NAPoly> quasihomogeneous_components(const Field &F, const NAPoly &p) {
    std::map<std::vector<std::size_t>, std::vector<std::pair<fel, MonPtr>>> groups;
    for (const auto &[c, m] : p.terms)
        groups[reduced_profile(F, m, p.nvars)].push_back({c, m});
    std::vector<NAPoly> out;
    for (auto &[profile, terms] : groups)
        out.push_back(make_poly(F, std::move(terms)));
    return out;
}

bool is_quasihomogeneous(const Field &F, const NAPoly &p) {
    return quasihomogeneous_components(F, p).size() <= 1;
}

bool is_identity_of_ground_field(const Field &F, const NAPoly &p) {
    std::map<std::vector<std::size_t>, fel> sums;
    for (const auto &[c, m] : p.terms) {
        auto key = reduced_profile(F, m, p.nvars);
        auto [it, fresh] = sums.emplace(key, fel(0));
        it->second = F.add(it->second, c);
    }
    for (const auto &[key, sum] : sums)
        if (sum != 0)
            return false;
    return true;
}

} // namespace vlab
