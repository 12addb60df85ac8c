#include "fcext/parse.hpp"

#include <cctype>
#include <sstream>

namespace fcext {

namespace {

struct Cursor {
    const std::string& s;
    size_t pos = 0;

    void skip_ws()
    {
        while (pos < s.size() && std::isspace((unsigned char)s[pos]))
            ++pos;
    }
    bool eat(char c)
    {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool peek(char c)
    {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    bool done()
    {
        skip_ws();
        return pos >= s.size();
    }
    long number()
    {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos]))
            ++pos;
        FCEXT_CHECK(pos > start, "expected a number at '" + s.substr(start, 12) + "'");
        return std::stol(s.substr(start, pos - start));
    }
};

/* Sq(n) | P(r1,...) | 1; slot (from a trailing e<k>) reported separately. */
bool parse_factor(Cursor& c, MilnorBasisElt& out, int& slot)
{
    c.skip_ws();
    if (c.pos >= c.s.size())
        return false;
    if (c.s[c.pos] == '1') {
        ++c.pos;
        out = MilnorBasisElt{};
        return true;
    }
    if (c.s[c.pos] == 'e') {
        ++c.pos;
        long k = c.number();
        FCEXT_CHECK(k >= 1, "basis vectors are 1-based");
        slot = (int)k - 1;
        return true;
    }
    if (c.s.compare(c.pos, 3, "Sq(") == 0) {
        c.pos += 3;
        long n = c.number();
        FCEXT_CHECK(c.eat(')'), "expected ')'");
        FCEXT_CHECK(n >= 0, "Sq needs n >= 0");
        out = MilnorBasisElt::sq((uint32_t)n);
        return true;
    }
    if (c.s.compare(c.pos, 2, "P(") == 0) {
        c.pos += 2;
        MilnorBasisElt m;
        if (!c.peek(')')) {
            m.r.push_back((uint32_t)c.number());
            while (c.eat(','))
                m.r.push_back((uint32_t)c.number());
        }
        FCEXT_CHECK(c.eat(')'), "expected ')'");
        m.trim();
        out = m;
        return true;
    }
    throw Error("unexpected input at '" + c.s.substr(c.pos, 12) + "'");
}

/* One '*'-joined term.  Returns the product of the Milnor factors; slot is
 * -1 unless a trailing e<k> closes the term. */
MilnorElt parse_term(Cursor& c, int& slot)
{
    slot = -1;
    MilnorElt acc = MilnorElt::unit();
    int deg_budget = 0;
    std::vector<MilnorBasisElt> factors;
    for (;;) {
        MilnorBasisElt f;
        int fslot = -1;
        FCEXT_CHECK(parse_factor(c, f, fslot), "empty term");
        if (fslot >= 0) {
            slot = fslot;
            FCEXT_CHECK(!c.eat('*'), "e<k> must close its term");
            break;
        }
        factors.push_back(f);
        deg_budget += f.degree();
        if (!c.eat('*'))
            break;
    }
    TruncationBound exact{deg_budget};
    for (const MilnorBasisElt& f : factors)
        acc = milnor_product_elt(acc, MilnorElt::single(f), exact);
    return acc;
}

}  // namespace

MilnorElt parse_milnor(const std::string& text)
{
    Cursor c{text};
    if (c.eat('0')) {
        FCEXT_CHECK(c.done(), "trailing input after 0");
        return MilnorElt::zero();
    }
    MilnorElt acc;
    for (;;) {
        int slot = -1;
        MilnorElt term = parse_term(c, slot);
        FCEXT_CHECK(slot < 0, "e<k> not allowed in a ring element");
        acc = add(acc, term);
        if (!c.eat('+'))
            break;
    }
    FCEXT_CHECK(c.done(), "trailing input at '" + text.substr(c.pos, 12) + "'");
    return acc;
}

std::string print_milnor(const MilnorBasisElt& m)
{
    if (m.r.empty())
        return "1";
    if (m.r.size() == 1)
        return "Sq(" + std::to_string(m.r[0]) + ")";
    std::string s = "P(";
    for (size_t k = 0; k < m.r.size(); ++k)
        s += (k ? "," : "") + std::to_string(m.r[k]);
    return s + ")";
}

std::string print_milnor(const MilnorElt& x)
{
    if (x.is_zero())
        return "0";
    std::string s;
    for (const MilnorBasisElt& t : x.terms)
        s += (s.empty() ? "" : "+") + print_milnor(t);
    return s;
}

ModuleFile parse_module_file(const std::string& text)
{
    ModuleFile mf;
    bool have_rank = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos)
            line.resize(hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word))
            continue;
        try {
            if (word == "rank") {
                FCEXT_CHECK(!have_rank, "duplicate rank line");
                FCEXT_CHECK(ls >> mf.rank && mf.rank >= 0, "bad rank");
                have_rank = true;
            }
            else if (word == "degrees") {
                FCEXT_CHECK(have_rank, "degrees before rank");
                mf.degrees.clear();
                int d;
                while (ls >> d) {
                    FCEXT_CHECK(d >= 0, "generator degrees must be non-negative");
                    mf.degrees.push_back(d);
                }
                FCEXT_CHECK((int)mf.degrees.size() == mf.rank, "degrees count != rank");
            }
            else if (word == "rel") {
                FCEXT_CHECK(have_rank, "rel before rank");
                std::string rest;
                std::getline(ls, rest);
                Cursor c{rest};
                ModuleRelation rel;
                rel.coeffs.assign(mf.rank, MilnorElt{});
                for (;;) {
                    int slot = -1;
                    MilnorElt coeff = parse_term(c, slot);
                    FCEXT_CHECK(slot >= 0, "relation term must end in e<k>");
                    FCEXT_CHECK(slot < mf.rank, "e" + std::to_string(slot + 1) + " exceeds rank");
                    rel.coeffs[slot] = add(rel.coeffs[slot], coeff);
                    if (!c.eat('+'))
                        break;
                }
                FCEXT_CHECK(c.done(), "trailing input in relation");
                mf.relations.push_back(std::move(rel));
            }
            else {
                throw Error("unknown directive '" + word + "'");
            }
        }
        catch (const Error& e) {
            throw Error("module file line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    FCEXT_CHECK(have_rank, "module file missing rank");
    if (mf.degrees.empty())
        mf.degrees.assign(mf.rank, 0);
    return mf;
}

ModulePresentation to_presentation(const Algebra& alg, const ModuleFile& mf)
{
    ModulePresentation p;
    p.gen_degrees = mf.degrees;
    for (const ModuleRelation& rel : mf.relations) {
        std::vector<ModMono> terms;
        int deg = -1;
        bool in_range = true;
        for (int slot = 0; slot < mf.rank && in_range; ++slot) {
            if (rel.coeffs[slot].is_zero())
                continue;
            for (const MilnorBasisElt& m : rel.coeffs[slot].terms) {
                int d = m.degree() + mf.degrees[slot];
                FCEXT_CHECK(deg < 0 || d == deg, "inhomogeneous relation");
                deg = d;
                if (d > alg.trunc()) {
                    in_range = false;
                    break;
                }
            }
            if (!in_range)
                break;
            AlgElt a = alg.to_pst(rel.coeffs[slot]);
            for (const Mono& t : a.terms)
                terms.push_back(ModMono{t, slot});
        }
        if (!in_range || terms.empty())
            continue;
        sort_terms(terms);
        p.relations.push_back(FreeElt{std::move(terms)});
    }
    return p;
}

std::string print_relation(const Algebra& alg, const FreeElt& x)
{
    if (x.is_zero())
        return "0";
    std::string s;
    for (const ModMono& t : x.terms) {
        MilnorElt lift = alg.lift_mono(t.m);
        // one printed term per Milnor summand of the lift
        for (const MilnorBasisElt& m : lift.terms) {
            if (!s.empty())
                s += " + ";
            if (!m.r.empty())
                s += print_milnor(m) + "*";
            s += "e" + std::to_string(t.slot + 1);
        }
    }
    return s;
}

}  // namespace fcext
