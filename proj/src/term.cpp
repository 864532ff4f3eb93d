#include "bochvar/term.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace bochvar {

TermPtr Term::variable(std::string name) {
    auto t = std::make_shared<Term>();
    t->kind = TermKind::Var;
    t->var = std::move(name);
    return t;
}

TermPtr Term::constant(bool one) {
    auto t = std::make_shared<Term>();
    t->kind = one ? TermKind::One : TermKind::Zero;
    return t;
}

TermPtr Term::make(TermKind k, TermPtr a, TermPtr b) {
    auto t = std::make_shared<Term>();
    t->kind = k;
    t->left = std::move(a);
    t->right = std::move(b);
    return t;
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
    if (a == b) return true;
    if (!a || !b || a->kind != b->kind) return false;
    if (a->kind == TermKind::Var) return a->var == b->var;
    return term_equal(a->left, b->left) && term_equal(a->right, b->right);
}

// ----------------------------------------------------------------------------
// Parser
// ----------------------------------------------------------------------------

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    TermPtr parse() {
        TermPtr t = parse_or();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return t;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw error("syntax error at position " + std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    TermPtr parse_or() {
        TermPtr t = parse_and();
        while (eat('|')) t = Term::make(TermKind::Or, t, parse_and());
        return t;
    }

    TermPtr parse_and() {
        TermPtr t = parse_unary();
        while (eat('&')) t = Term::make(TermKind::And, t, parse_unary());
        return t;
    }

    TermPtr parse_unary() {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '-') {
            ++pos_;
            return Term::make(TermKind::Not, parse_unary());
        }
        if (pos_ + 1 < text_.size() && text_[pos_] == 'J') {
            char d = text_[pos_ + 1];
            if (d == '0' || d == '1' || d == '2') {
                pos_ += 2;
                TermKind k = d == '0' ? TermKind::J0 : d == '1' ? TermKind::J1 : TermKind::J2;
                return Term::make(k, parse_unary());
            }
            fail("expected J0, J1 or J2");
        }
        return parse_primary();
    }

    TermPtr parse_primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            TermPtr t = parse_or();
            if (!eat(')')) fail("expected ')'");
            return t;
        }
        if (c == '0' || c == '1') {
            ++pos_;
            return Term::constant(c == '1');
        }
        if (c >= 'a' && c <= 'z') {
            size_t start = pos_;
            ++pos_;
            while (pos_ < text_.size() &&
                   ((text_[pos_] >= 'a' && text_[pos_] <= 'z') ||
                    (text_[pos_] >= '0' && text_[pos_] <= '9')))
                ++pos_;
            return Term::variable(text_.substr(start, pos_ - start));
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    const std::string& text_;
    size_t pos_ = 0;
};

int precedence(TermKind k) {
    switch (k) {
        case TermKind::Or: return 1;
        case TermKind::And: return 2;
        default: return 3;
    }
}

void print(const TermPtr& t, std::ostream& os) {
    switch (t->kind) {
        case TermKind::Var: os << t->var; return;
        case TermKind::Zero: os << '0'; return;
        case TermKind::One: os << '1'; return;
        case TermKind::Not:
        case TermKind::J0:
        case TermKind::J1:
        case TermKind::J2: {
            if (t->kind == TermKind::Not) os << '-';
            else os << 'J' << (t->kind == TermKind::J0 ? '0' : t->kind == TermKind::J1 ? '1' : '2')
                    << ' ';
            bool parens = precedence(t->left->kind) < 3;
            if (parens) os << '(';
            print(t->left, os);
            if (parens) os << ')';
            return;
        }
        case TermKind::And:
        case TermKind::Or: {
            const char op = t->kind == TermKind::And ? '&' : '|';
            const int prec = precedence(t->kind);
            bool lp = precedence(t->left->kind) < prec;
            bool rp = precedence(t->right->kind) <= prec;  // left-associative
            if (lp) os << '(';
            print(t->left, os);
            if (lp) os << ')';
            os << ' ' << op << ' ';
            if (rp) os << '(';
            print(t->right, os);
            if (rp) os << ')';
            return;
        }
    }
}

void collect_vars(const TermPtr& t, std::set<std::string>& out) {
    if (!t) return;
    if (t->kind == TermKind::Var) out.insert(t->var);
    collect_vars(t->left, out);
    collect_vars(t->right, out);
}

}  // namespace

TermPtr parse_term(const std::string& text) { return Parser(text).parse(); }

std::string term_to_string(const TermPtr& t) {
    std::ostringstream os;
    print(t, os);
    return os.str();
}

TermPtr desugar(const TermPtr& t) {
    switch (t->kind) {
        case TermKind::Var:
        case TermKind::Zero:
        case TermKind::One: return t;
        case TermKind::Not: return Term::make(TermKind::Not, desugar(t->left));
        case TermKind::J2: return Term::make(TermKind::J2, desugar(t->left));
        case TermKind::J0:  // J0 t := J2 -t
            return Term::make(TermKind::J2, Term::make(TermKind::Not, desugar(t->left)));
        case TermKind::J1: {  // J1 t := -(J2 t | J2 -t)
            TermPtr s = desugar(t->left);
            return Term::make(
                TermKind::Not,
                Term::make(TermKind::Or, Term::make(TermKind::J2, s),
                           Term::make(TermKind::J2, Term::make(TermKind::Not, s))));
        }
        case TermKind::And:
            return Term::make(TermKind::And, desugar(t->left), desugar(t->right));
        case TermKind::Or:
            return Term::make(TermKind::Or, desugar(t->left), desugar(t->right));
    }
    throw error("unreachable term kind");
}

std::vector<std::string> term_variables(const TermPtr& t) {
    std::set<std::string> s;
    collect_vars(t, s);
    return {s.begin(), s.end()};
}

// ----------------------------------------------------------------------------
// Evaluation
// ----------------------------------------------------------------------------

namespace {

// Index-based evaluation core shared by the exhaustive checkers.
int eval_indexed(const Term* t, const FiniteAlgebra& a, const std::map<std::string, int>& slots,
                 const std::vector<int>& values) {
    switch (t->kind) {
        case TermKind::Var: {
            auto it = slots.find(t->var);
            if (it == slots.end()) throw error("valuation misses variable '" + t->var + "'");
            return values[it->second];
        }
        case TermKind::Zero: return a.zero();
        case TermKind::One: return a.one();
        case TermKind::Not: return a.neg(eval_indexed(t->left.get(), a, slots, values));
        case TermKind::J2: return a.j2(eval_indexed(t->left.get(), a, slots, values));
        case TermKind::J0: return a.j2(a.neg(eval_indexed(t->left.get(), a, slots, values)));
        case TermKind::J1: {
            int v = eval_indexed(t->left.get(), a, slots, values);
            return a.neg(a.join(a.j2(v), a.j2(a.neg(v))));
        }
        case TermKind::And:
            return a.meet(eval_indexed(t->left.get(), a, slots, values),
                          eval_indexed(t->right.get(), a, slots, values));
        case TermKind::Or:
            return a.join(eval_indexed(t->left.get(), a, slots, values),
                          eval_indexed(t->right.get(), a, slots, values));
    }
    throw error("unreachable term kind");
}

std::map<std::string, int> slot_map(const std::vector<std::string>& vars) {
    std::map<std::string, int> m;
    for (size_t i = 0; i < vars.size(); ++i) m[vars[i]] = static_cast<int>(i);
    return m;
}

Valuation to_valuation(const FiniteAlgebra& a, const std::vector<std::string>& vars,
                       const std::vector<int>& values) {
    Valuation v;
    for (size_t i = 0; i < vars.size(); ++i) v[vars[i]] = a.element(values[i]);
    return v;
}

// Runs fn over every assignment of the given variables; fn returns false to
// stop (a counterexample was found).
template <typename Fn>
void for_each_valuation(const FiniteAlgebra& a, size_t var_count, Fn&& fn) {
    std::vector<int> values(var_count, 0);
    if (var_count == 0) {
        fn(values);
        return;
    }
    while (true) {
        if (!fn(values)) return;
        int pos = static_cast<int>(var_count) - 1;
        while (pos >= 0) {
            if (++values[pos] < a.size()) break;
            values[pos] = 0;
            --pos;
        }
        if (pos < 0) return;
    }
}

}  // namespace

int evaluate(const TermPtr& t, const FiniteAlgebra& a, const Valuation& v) {
    auto vars = term_variables(t);
    auto slots = slot_map(vars);
    std::vector<int> values(vars.size());
    for (size_t i = 0; i < vars.size(); ++i) {
        auto it = v.find(vars[i]);
        if (it == v.end()) throw error("valuation misses variable '" + vars[i] + "'");
        values[i] = a.index_of(it->second);
    }
    return eval_indexed(t.get(), a, slots, values);
}

Identity parse_identity(const std::string& text) {
    auto eq = text.find('=');
    if (eq == std::string::npos) throw error("identity must contain '='");
    if (text.find('=', eq + 1) != std::string::npos) throw error("identity has more than one '='");
    return {parse_term(text.substr(0, eq)), parse_term(text.substr(eq + 1))};
}

QuasiIdentity parse_quasi_identity(const std::string& text) {
    auto arrow = text.find("=>");
    if (arrow == std::string::npos) return {{}, parse_identity(text)};
    QuasiIdentity q;
    std::string premises = text.substr(0, arrow);
    size_t start = 0;
    while (start <= premises.size()) {
        auto comma = premises.find(',', start);
        std::string piece =
            comma == std::string::npos ? premises.substr(start) : premises.substr(start, comma - start);
        if (piece.find_first_not_of(" \t") != std::string::npos)
            q.premises.push_back(parse_identity(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    q.conclusion = parse_identity(text.substr(arrow + 2));
    return q;
}

std::string identity_to_string(const Identity& id) {
    return term_to_string(id.lhs) + " = " + term_to_string(id.rhs);
}

std::string quasi_identity_to_string(const QuasiIdentity& q) {
    if (q.premises.empty()) return identity_to_string(q.conclusion);
    std::ostringstream os;
    for (size_t i = 0; i < q.premises.size(); ++i) {
        if (i) os << " , ";
        os << identity_to_string(q.premises[i]);
    }
    os << " => " << identity_to_string(q.conclusion);
    return os.str();
}

std::string valuation_to_string(const Valuation& v) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [var, val] : v) {
        if (!first) os << ",";
        first = false;
        os << var << "=" << val;
    }
    return os.str();
}

CheckResult check_identity(const FiniteAlgebra& a, const Identity& id) {
    return check_quasi_identity(a, QuasiIdentity{{}, id});
}

CheckResult check_quasi_identity(const FiniteAlgebra& a, const QuasiIdentity& q) {
    std::set<std::string> var_set;
    for (const auto& p : q.premises) {
        collect_vars(p.lhs, var_set);
        collect_vars(p.rhs, var_set);
    }
    collect_vars(q.conclusion.lhs, var_set);
    collect_vars(q.conclusion.rhs, var_set);
    std::vector<std::string> vars(var_set.begin(), var_set.end());
    auto slots = slot_map(vars);

    CheckResult res;
    res.holds = true;
    for_each_valuation(a, vars.size(), [&](const std::vector<int>& values) {
        for (const auto& p : q.premises)
            if (eval_indexed(p.lhs.get(), a, slots, values) !=
                eval_indexed(p.rhs.get(), a, slots, values))
                return true;  // premise fails, valuation irrelevant
        if (eval_indexed(q.conclusion.lhs.get(), a, slots, values) !=
            eval_indexed(q.conclusion.rhs.get(), a, slots, values)) {
            res.holds = false;
            res.counterexample = to_valuation(a, vars, values);
            return false;
        }
        return true;
    });
    return res;
}

CheckResult tautology(const TermPtr& t, const FiniteAlgebra& matrix,
                      const std::vector<int>& designated) {
    std::set<int> good(designated.begin(), designated.end());
    auto vars = term_variables(t);
    auto slots = slot_map(vars);
    CheckResult res;
    res.holds = true;
    for_each_valuation(matrix, vars.size(), [&](const std::vector<int>& values) {
        if (!good.count(eval_indexed(t.get(), matrix, slots, values))) {
            res.holds = false;
            res.counterexample = to_valuation(matrix, vars, values);
            return false;
        }
        return true;
    });
    return res;
}

}  // namespace bochvar
