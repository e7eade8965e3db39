#include "wopt/io.hpp"

#include <fstream>
#include <sstream>

namespace wopt {

namespace {

std::string index_field(const std::string& field, std::size_t i)
{
    return field + "[" + std::to_string(i) + "]";
}

[[noreturn]] void fail(const std::string& field, const std::string& message)
{
    throw InputError("field '" + field + "': " + message);
}

const Json* find(const Json& j, const char* key)
{
    auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

template <typename T, typename Parse>
std::vector<T> vector_from_json(const Json& j, const std::string& field, Parse parse)
{
    if (!j.is_array())
        fail(field, "expected an array");
    std::vector<T> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(parse(j[i], index_field(field, i)));
    return out;
}

template <typename T, typename Parse>
std::vector<std::vector<T>> rows_from_json(const Json& j, const std::string& field, Parse parse)
{
    if (!j.is_array())
        fail(field, "expected an array of rows");
    std::vector<std::vector<T>> rows;
    for (std::size_t i = 0; i < j.size(); ++i) {
        rows.push_back(vector_from_json<T>(j[i], index_field(field, i), parse));
        if (rows.back().size() != rows.front().size())
            fail(field, "rows have different lengths");
    }
    return rows;
}

template <typename T>
DenseMatrix<T> matrix_from_rows(const std::vector<std::vector<T>>& rows, std::size_t expected_rows,
                                std::size_t expected_cols, const std::string& field)
{
    // An empty array stands for any block without entries.
    if (rows.empty() && (expected_rows == 0 || expected_cols == 0))
        return DenseMatrix<T>(expected_rows, expected_cols);
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    if (rows.size() != expected_rows || cols != expected_cols)
        fail(field, "expected a " + std::to_string(expected_rows) + "x" + std::to_string(expected_cols) +
                        " matrix, got " + std::to_string(rows.size()) + "x" + std::to_string(cols));
    return DenseMatrix<T>::from_rows(rows, cols);
}

template <typename T>
std::vector<T> vector_of_length(std::vector<T> values, std::size_t expected, const std::string& field)
{
    if (values.size() != expected)
        fail(field, "expected length " + std::to_string(expected) + ", got " + std::to_string(values.size()));
    return values;
}

template <typename T>
Json matrix_to_json(const DenseMatrix<T>& m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (const auto& v : m.row(i))
            row.push_back(to_json(v));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <typename T>
Json vector_to_json(const std::vector<T>& v)
{
    Json out = Json::array();
    for (const auto& x : v)
        out.push_back(to_json(x));
    return out;
}

struct Dims {
    std::optional<std::size_t> k, l, m, n;
};

void settle(std::optional<std::size_t>& dim, std::size_t value, const char* name, const std::string& field)
{
    if (dim && *dim != value)
        fail(field, std::string("implies ") + name + " = " + std::to_string(value) + ", but " + name + " = " +
                        std::to_string(*dim) + " elsewhere");
    dim = value;
}

std::size_t read_count(const Json& j, const std::string& field)
{
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
        fail(field, "expected a nonnegative integer");
    return j.get<std::size_t>();
}

} // namespace

Rational rational_from_json(const Json& j, const std::string& field)
{
    if (j.is_number_integer() || j.is_number_unsigned())
        return Rational(j.dump());
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            fail(field, e.what());
        }
    }
    if (j.is_number_float())
        fail(field, "non-integer numbers must be written as strings (\"p/q\" or decimal) to stay exact");
    fail(field, "expected a rational");
}

Json to_json(const Rational& value) { return to_string(value); }

Interval interval_from_json(const Json& j, const std::string& field)
{
    try {
        if (j.is_array()) {
            if (j.size() != 2)
                fail(field, "an interval is [lo, hi]");
            return Interval(rational_from_json(j[0], field + "[0]"), rational_from_json(j[1], field + "[1]"));
        }
        return Interval(rational_from_json(j, field));
    } catch (const std::invalid_argument& e) {
        fail(field, e.what());
    }
}

Json to_json(const Interval& value)
{
    if (value.is_degenerate())
        return to_json(value.lo());
    return Json::array({to_json(value.lo()), to_json(value.hi())});
}

Instance instance_from_json(const Json& j)
{
    if (!j.is_object())
        throw InputError("instance must be a JSON object");
    Instance out;
    if (const Json* v = find(j, "version")) {
        if (!v->is_string())
            fail("version", "expected a string");
        out.version = v->get<std::string>();
        if (out.version != kFormatVersion)
            fail("version", "unsupported version '" + out.version + "'");
    }

    auto parse_iv = [](const Json& e, const std::string& f) { return interval_from_json(e, f); };
    auto matrix_rows = [&](const char* key) -> std::optional<std::vector<std::vector<Interval>>> {
        if (const Json* v = find(j, key))
            return rows_from_json<Interval>(*v, key, parse_iv);
        return std::nullopt;
    };
    auto vector_entries = [&](const char* key) -> std::optional<std::vector<Interval>> {
        if (const Json* v = find(j, key))
            return vector_from_json<Interval>(*v, key, parse_iv);
        return std::nullopt;
    };

    auto Af = matrix_rows("Af"), An = matrix_rows("An"), Bf = matrix_rows("Bf"), Bn = matrix_rows("Bn");
    auto a = vector_entries("a"), b = vector_entries("b"), cf = vector_entries("cf"), cn = vector_entries("cn");

    Dims dims;
    if (const Json* d = find(j, "dims")) {
        if (!d->is_object())
            fail("dims", "expected an object");
        for (auto [key, slot] : {std::pair{"k", &dims.k}, {"l", &dims.l}, {"m", &dims.m}, {"n", &dims.n}})
            if (const Json* v = find(*d, key))
                *slot = read_count(*v, std::string("dims.") + key);
    }
    auto infer_matrix = [&](const auto& rows, std::optional<std::size_t>& row_dim,
                            std::optional<std::size_t>& col_dim, const char* row_name, const char* col_name,
                            const char* key) {
        if (!rows || rows->empty())
            return;
        settle(row_dim, rows->size(), row_name, key);
        settle(col_dim, rows->front().size(), col_name, key);
    };
    infer_matrix(Af, dims.k, dims.m, "k", "m", "Af");
    infer_matrix(An, dims.k, dims.n, "k", "n", "An");
    infer_matrix(Bf, dims.l, dims.m, "l", "m", "Bf");
    infer_matrix(Bn, dims.l, dims.n, "l", "n", "Bn");
    if (a)
        settle(dims.k, a->size(), "k", "a");
    if (b)
        settle(dims.l, b->size(), "l", "b");
    if (cf)
        settle(dims.m, cf->size(), "m", "cf");
    if (cn)
        settle(dims.n, cn->size(), "n", "cn");

    const std::size_t k = dims.k.value_or(0), l = dims.l.value_or(0), m = dims.m.value_or(0),
                      n = dims.n.value_or(0);
    auto matrix = [](const auto& rows, std::size_t r, std::size_t c, const char* key) {
        if (!rows)
            return IntervalMatrix(r, c, Interval(Rational(0)));
        return matrix_from_rows(*rows, r, c, key);
    };
    auto vec = [](const auto& values, std::size_t len, const char* key) {
        if (!values)
            return IntervalVector(len, Interval(Rational(0)));
        return vector_of_length(*values, len, key);
    };
    out.data = IlpData(matrix(Af, k, m, "Af"), matrix(An, k, n, "An"), matrix(Bf, l, m, "Bf"),
                       matrix(Bn, l, n, "Bn"), vec(a, k, "a"), vec(b, l, "b"), vec(cf, m, "cf"),
                       vec(cn, n, "cn"));

    if (const Json* p = find(j, "point")) {
        out.point = point_from_json(*p);
        if (out.point->xf.size() != m || out.point->xn.size() != n)
            fail("point", "expected xf of length " + std::to_string(m) + " and xn of length " + std::to_string(n));
    }
    return out;
}

Json to_json(const IlpData& data)
{
    Json j = Json::object();
    j["dims"] = {{"k", data.k()}, {"l", data.l()}, {"m", data.m()}, {"n", data.n()}};
    j["Af"] = matrix_to_json(data.Af());
    j["An"] = matrix_to_json(data.An());
    j["Bf"] = matrix_to_json(data.Bf());
    j["Bn"] = matrix_to_json(data.Bn());
    j["a"] = vector_to_json(data.a());
    j["b"] = vector_to_json(data.b());
    j["cf"] = vector_to_json(data.cf());
    j["cn"] = vector_to_json(data.cn());
    return j;
}

Json to_json(const Instance& instance)
{
    Json j = Json::object();
    j["version"] = instance.version;
    Json data = to_json(instance.data);
    for (auto& [key, value] : data.items())
        j[key] = std::move(value);
    if (instance.point)
        j["point"] = to_json(*instance.point);
    return j;
}

Point point_from_json(const Json& j, const std::string& field)
{
    if (!j.is_object())
        fail(field, "expected an object with xf and xn");
    auto parse_r = [](const Json& e, const std::string& f) { return rational_from_json(e, f); };
    Point x;
    if (const Json* v = find(j, "xf"))
        x.xf = vector_from_json<Rational>(*v, field + ".xf", parse_r);
    if (const Json* v = find(j, "xn"))
        x.xn = vector_from_json<Rational>(*v, field + ".xn", parse_r);
    return x;
}

Json to_json(const Point& x)
{
    return Json{{"xf", vector_to_json(x.xf)}, {"xn", vector_to_json(x.xn)}};
}

IntervalSystem interval_system_from_json(const Json& j)
{
    if (!j.is_object())
        throw InputError("interval system must be a JSON object with Bf and b");
    auto parse_iv = [](const Json& e, const std::string& f) { return interval_from_json(e, f); };
    IntervalSystem out;
    std::vector<std::vector<Interval>> rows;
    if (const Json* v = find(j, "Bf"))
        rows = rows_from_json<Interval>(*v, "Bf", parse_iv);
    if (const Json* v = find(j, "b"))
        out.b = vector_from_json<Interval>(*v, "b", parse_iv);
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    if (const Json* v = find(j, "m")) {
        std::size_t m = read_count(*v, "m");
        if (!rows.empty() && m != cols)
            fail("m", "differs from the column count of Bf");
        cols = m;
    }
    out.Bf = matrix_from_rows(rows, out.b.size(), cols, "Bf");
    return out;
}

Scenario scenario_from_json(const Json& j, const IlpData& data, const std::string& field)
{
    if (!j.is_object())
        fail(field, "expected an object");
    auto parse_r = [](const Json& e, const std::string& f) { return rational_from_json(e, f); };
    auto matrix = [&](const char* key, std::size_t r, std::size_t c) {
        const std::string f = field + "." + key;
        const Json* v = find(j, key);
        if (!v)
            fail(f, "missing");
        return matrix_from_rows(rows_from_json<Rational>(*v, f, parse_r), r, c, f);
    };
    auto vec = [&](const char* key, std::size_t len) {
        const std::string f = field + "." + key;
        const Json* v = find(j, key);
        if (!v)
            fail(f, "missing");
        return vector_of_length(vector_from_json<Rational>(*v, f, parse_r), len, f);
    };
    return Scenario{matrix("Af", data.k(), data.m()), matrix("An", data.k(), data.n()),
                    matrix("Bf", data.l(), data.m()), matrix("Bn", data.l(), data.n()),
                    vec("a", data.k()),                vec("b", data.l()),
                    vec("cf", data.m()),               vec("cn", data.n())};
}

Json to_json(const Scenario& s)
{
    Json j = Json::object();
    j["Af"] = matrix_to_json(s.Af);
    j["An"] = matrix_to_json(s.An);
    j["Bf"] = matrix_to_json(s.Bf);
    j["Bn"] = matrix_to_json(s.Bn);
    j["a"] = vector_to_json(s.a);
    j["b"] = vector_to_json(s.b);
    j["cf"] = vector_to_json(s.cf);
    j["cn"] = vector_to_json(s.cn);
    return j;
}

Witness witness_from_json(const Json& j, const IlpData& data)
{
    if (!j.is_object())
        fail("witness", "expected an object");
    auto parse_r = [](const Json& e, const std::string& f) { return rational_from_json(e, f); };
    Witness w;
    const Json* s = find(j, "scenario");
    if (!s)
        fail("witness.scenario", "missing");
    w.scenario = scenario_from_json(*s, data, "witness.scenario");
    if (const Json* v = find(j, "yf"))
        w.yf = vector_from_json<Rational>(*v, "witness.yf", parse_r);
    if (const Json* v = find(j, "yn"))
        w.yn = vector_from_json<Rational>(*v, "witness.yn", parse_r);
    if (const Json* v = find(j, "sigma")) {
        if (!v->is_array())
            fail("witness.sigma", "expected an array");
        for (std::size_t i = 0; i < v->size(); ++i) {
            const Json& e = (*v)[i];
            if (!e.is_number_integer() || (e.get<int>() != 1 && e.get<int>() != -1))
                fail(index_field("witness.sigma", i), "expected 1 or -1");
            w.sigma.push_back(static_cast<std::int8_t>(e.get<int>()));
        }
    }
    return w;
}

Json to_json(const Witness& w)
{
    Json sigma = Json::array();
    for (auto s : w.sigma)
        sigma.push_back(static_cast<int>(s));
    Json j = Json::object();
    j["sigma"] = std::move(sigma);
    j["yf"] = vector_to_json(w.yf);
    j["yn"] = vector_to_json(w.yn);
    j["scenario"] = to_json(w.scenario);
    return j;
}

Report report_from_json(const Json& j, const IlpData& data)
{
    if (!j.is_object())
        throw InputError("report must be a JSON object");
    Report r;
    const Json* v = find(j, "verdict");
    if (!v || !v->is_string())
        fail("verdict", "missing or not a string");
    const std::string tag = v->get<std::string>();
    if (tag == to_string(VerdictTag::WeaklyOptimal))
        r.verdict = VerdictTag::WeaklyOptimal;
    else if (tag == to_string(VerdictTag::NotWeaklyOptimal))
        r.verdict = VerdictTag::NotWeaklyOptimal;
    else if (tag == to_string(VerdictTag::NotWeaklyFeasible))
        r.verdict = VerdictTag::NotWeaklyFeasible;
    else
        fail("verdict", "unknown verdict '" + tag + "'");
    if (const Json* p = find(j, "point"))
        r.point = point_from_json(*p);
    if (const Json* w = find(j, "witness"))
        r.witness = witness_from_json(*w, data);
    if (const Json* s = find(j, "stats"); s && s->is_object()) {
        if (const Json* c = find(*s, "orthants_tried"))
            r.stats.orthants_tried = read_count(*c, "stats.orthants_tried");
        if (const Json* c = find(*s, "row_completions"))
            r.stats.row_completions = read_count(*c, "stats.row_completions");
    }
    return r;
}

Json to_json(const Report& report)
{
    Json j = Json::object();
    j["verdict"] = std::string(to_string(report.verdict));
    j["point"] = to_json(report.point);
    if (report.witness)
        j["witness"] = to_json(*report.witness);
    Json stats = Json::object();
    stats["orthants_tried"] = report.stats.orthants_tried;
    stats["lp_solves"] = report.stats.orthants_tried;
    stats["row_completions"] = report.stats.row_completions;
    if (report.wall_time_ms)
        stats["wall_time_ms"] = *report.wall_time_ms;
    j["stats"] = std::move(stats);
    if (report.exhaustive) {
        Json orthants = Json::array();
        for (const auto& sigma : report.feasible_orthants) {
            Json s = Json::array();
            for (auto v : sigma)
                s.push_back(static_cast<int>(v));
            orthants.push_back(std::move(s));
        }
        j["feasible_orthants"] = std::move(orthants);
    }
    return j;
}

Json parse_json_text(const std::string& text, const std::string& source)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(source + ": " + e.what());
    }
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_json_text(buffer.str(), path);
}

} // namespace wopt
