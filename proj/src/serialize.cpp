#include "supercoinv/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace supercoinv {

namespace {

Json integer_json(const Integer& v)
{
    if (!v.fits_slong_p())
        throw std::overflow_error("integer " + v.get_str() + " does not fit a JSON int");
    return Json(static_cast<long>(v.get_si()));
}

Integer integer_from(const Json& j)
{
    if (j.is_number_integer())
        return Integer(static_cast<long>(j.get<int64_t>()));
    if (j.is_string())
        return Integer(j.get<std::string>());
    throw ParseError("expected an integer, got " + j.dump());
}

const Json& field(const Json& j, const char* name)
{
    if (!j.is_object() || !j.contains(name))
        throw ParseError(std::string("missing field \"") + name + "\"");
    return j.at(name);
}

std::vector<int> int_list(const Json& j)
{
    if (!j.is_array())
        throw ParseError("expected an array, got " + j.dump());
    std::vector<int> out;
    for (const auto& x : j) {
        if (!x.is_number_integer())
            throw ParseError("expected integers in " + j.dump());
        out.push_back(x.get<int>());
    }
    return out;
}

std::string superscript(int e)
{
    static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string s;
    for (char c : std::to_string(e))
        s += digits[c - '0'];
    return s;
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

Json to_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from_json(const Json& j)
{
    try {
        return Partition(int_list(j));
    }
    catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad partition: ") + e.what());
    }
}

Partition partition_from_key(const std::string& key)
{
    Json j;
    try {
        j = Json::parse(key);
    }
    catch (const Json::exception&) {
        throw ParseError("bad partition key " + key);
    }
    return partition_from_json(j);
}

Json to_json(const SchurMultVector& v)
{
    Json j = Json::object();
    for (const auto& [mu, m] : v)
        j[mu.str()] = integer_json(m);
    return j;
}

SchurMultVector schur_mult_from_json(const Json& j)
{
    if (!j.is_object())
        throw ParseError("multiplicity vector must be an object");
    SchurMultVector v;
    for (const auto& [key, val] : j.items())
        v[partition_from_key(key)] = integer_from(val);
    return v;
}

Json to_json(const QUPoly& p)
{
    Json j = Json::array();
    for (const auto& [e, c] : p.terms())
        j.push_back(Json{{"e", e}, {"c", c.get_str()}});
    return j;
}

QUPoly qupoly_from_json(const Json& j, Alphabet a)
{
    if (!j.is_array())
        throw ParseError("polynomial must be an array of terms");
    QUPoly p(a);
    for (const auto& t : j) {
        Exponents e = int_list(field(t, "e"));
        if (static_cast<int>(e.size()) != a.size())
            throw ParseError("exponent vector length differs from the alphabet");
        for (int x : e)
            if (x < 0)
                throw ParseError("negative exponent");
        p.add_term(e, integer_from(field(t, "c")));
    }
    return p;
}

Json to_json(const SuperSchurExpansion& e)
{
    Json terms = Json::array();
    for (const auto& [lambda, c] : e.coeffs)
        terms.push_back(Json{{"lambda", to_json(lambda)}, {"coeff", integer_json(c)}});
    return Json{{"k", e.k}, {"j", e.j}, {"n", e.n}, {"degree_bound", e.degree_bound}, {"terms", terms}};
}

SuperSchurExpansion expansion_from_json(const Json& j)
{
    SuperSchurExpansion e;
    e.k = field(j, "k").get<int>();
    e.j = field(j, "j").get<int>();
    e.n = field(j, "n").get<int>();
    e.degree_bound = field(j, "degree_bound").get<int>();
    for (const auto& t : field(j, "terms")) {
        Integer c = integer_from(field(t, "coeff"));
        if (c != 0)
            e.coeffs[partition_from_json(field(t, "lambda"))] = c;
    }
    return e;
}

Json to_json(const Multidegree& d) { return Json{{"r", d.r}, {"s", d.s}}; }

Multidegree multidegree_from_json(const Json& j) { return Multidegree{int_list(field(j, "r")), int_list(field(j, "s"))}; }

Json to_json(const FrobeniusSeries& f)
{
    Json comps = Json::array();
    for (const auto& [d, mults] : f.components)
        comps.push_back(Json{{"deg", to_json(d)}, {"mults", to_json(mults)}});
    return Json{{"n", f.n}, {"k", f.k}, {"j", f.j}, {"components", comps}};
}

FrobeniusSeries frobenius_from_json(const Json& j)
{
    FrobeniusSeries f;
    f.n = field(j, "n").get<int>();
    f.k = field(j, "k").get<int>();
    f.j = field(j, "j").get<int>();
    for (const auto& c : field(j, "components")) {
        Multidegree d = multidegree_from_json(field(c, "deg"));
        if (static_cast<int>(d.r.size()) != f.k || static_cast<int>(d.s.size()) != f.j)
            throw ParseError("component degree does not match (k, j)");
        f.components[d] = schur_mult_from_json(field(c, "mults"));
    }
    return f;
}

Json to_json(const CoeffTable& t)
{
    Json entries = Json::array();
    for (const auto& [key, c] : t.entries)
        entries.push_back(Json{{"lambda", to_json(key.first)}, {"mu", to_json(key.second)}, {"c", integer_json(c)}});
    return Json{{"n", t.n}, {"source", {t.k, t.j}}, {"entries", entries}};
}

CoeffTable coeff_table_from_json(const Json& j)
{
    CoeffTable t;
    t.n = field(j, "n").get<int>();
    auto source = int_list(field(j, "source"));
    if (source.size() != 2)
        throw ParseError("source must be [k, j]");
    t.k = source[0];
    t.j = source[1];
    for (const auto& e : field(j, "entries")) {
        Integer c = integer_from(field(e, "c"));
        if (c != 0)
            t.entries[{partition_from_json(field(e, "lambda")), partition_from_json(field(e, "mu"))}] = c;
    }
    return t;
}

// ---------------------------------------------------------------------------

std::string pretty(const QUPoly& p)
{
    if (p.is_zero())
        return "0";
    std::vector<std::pair<Exponents, Integer>> terms(p.terms().begin(), p.terms().end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        int da = QUPoly::partial_degree(a.first, 0, static_cast<int>(a.first.size()));
        int db = QUPoly::partial_degree(b.first, 0, static_cast<int>(b.first.size()));
        if (da != db)
            return da < db;
        return a.first > b.first;
    });
    const Alphabet& a = p.alphabet();
    std::string out;
    for (const auto& [e, c] : terms) {
        std::string mon;
        for (size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0)
                continue;
            mon += a.name(static_cast<int>(v));
            if (e[v] > 1)
                mon += superscript(e[v]);
        }
        Integer abs_c = abs(c);
        std::string coeff = (mon.empty() || abs_c != 1) ? abs_c.get_str() : "";
        if (c < 0)
            out += "-";
        else if (!out.empty())
            out += "+";
        out += coeff + mon;
    }
    return out;
}

std::string pretty(const SchurMultVector& v)
{
    if (v.empty())
        return "0";
    std::string out;
    for (const auto& [mu, m] : v) {
        if (!out.empty())
            out += m < 0 ? " - " : " + ";
        else if (m < 0)
            out += "-";
        Integer a = abs(m);
        out += (a == 1 ? std::string() : a.get_str()) + "s" + mu.str();
    }
    return out;
}

std::string frobenius_csv(const FrobeniusSeries& f)
{
    std::ostringstream os;
    for (int a = 0; a < f.k; ++a)
        os << "r" << a + 1 << ",";
    for (int c = 0; c < f.j; ++c)
        os << "s" << c + 1 << ",";
    os << "mu,mult\n";
    for (const auto& [d, mults] : f.components)
        for (const auto& [mu, m] : mults) {
            for (int v : d.r)
                os << v << ",";
            for (int v : d.s)
                os << v << ",";
            os << csv_quote(mu.str()) << "," << m.get_str() << "\n";
        }
    return os.str();
}

std::string frobenius_text(const FrobeniusSeries& f)
{
    std::ostringstream os;
    Alphabet a{f.k, f.j, 0};
    std::vector<std::pair<Multidegree, SchurMultVector>> comps(f.components.begin(), f.components.end());
    std::stable_sort(comps.begin(), comps.end(), [](const auto& x, const auto& y) {
        if (x.first.total() != y.first.total())
            return x.first.total() < y.first.total();
        return y.first < x.first;
    });
    for (const auto& [d, mults] : comps)
        os << pretty(monomial_of(a, d)) << ": " << pretty(mults) << "\n";
    return os.str();
}

std::string coeff_table_csv(const CoeffTable& t)
{
    std::ostringstream os;
    os << "lambda,mu,c\n";
    for (const auto& [key, c] : t.entries)
        os << csv_quote(key.first.str()) << "," << csv_quote(key.second.str()) << "," << c.get_str() << "\n";
    return os.str();
}

std::string coeff_table_text(const CoeffTable& t)
{
    std::ostringstream os;
    os << "c[lambda, mu] for n=" << t.n << " from (k,j)=(" << t.k << "," << t.j << ")\n";
    size_t width = 6;
    for (const auto& [key, c] : t.entries)
        width = std::max(width, key.first.str().size());
    for (const auto& [key, c] : t.entries) {
        std::string l = key.first.str();
        os << "  " << l << std::string(width - l.size() + 2, ' ') << key.second.str() << "  " << c.get_str() << "\n";
    }
    return os.str();
}

std::string qupoly_csv(const QUPoly& p)
{
    std::ostringstream os;
    const Alphabet& a = p.alphabet();
    for (int v = 0; v < a.size(); ++v)
        os << a.name(v) << ",";
    os << "coeff\n";
    for (const auto& [e, c] : p.terms()) {
        for (int x : e)
            os << x << ",";
        os << c.get_str() << "\n";
    }
    return os.str();
}

}  // namespace supercoinv
