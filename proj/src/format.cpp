#include "slitplane/format.hpp"

#include <json.hpp>

#include <sstream>

namespace slitplane {

std::string series_to_plain(const Series& f)
{
    std::ostringstream os;
    bool first = true;
    for (int n = 0; n <= f.order(); ++n) {
        for (const auto& [m, c] : f.coeff(n).terms()) {
            Rational a = c;
            if (first) {
                if (a < 0) {
                    os << "-";
                    a = -a;
                }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0)
                    a = -a;
            }
            const bool has_var = (m.ex != 0 || m.ey != 0 || n != 0);
            bool printed = false;
            if (!has_var || a != 1) {
                os << to_string(a);
                printed = true;
            }
            auto put = [&](const char* v, int e) {
                if (e == 0)
                    return;
                if (printed)
                    os << "*";
                os << v;
                if (e != 1)
                    os << "^" << e;
                printed = true;
            };
            put("x", m.ex);
            put("y", m.ey);
            put("t", n);
            first = false;
        }
    }
    if (first)
        return "0";
    return os.str();
}

std::string series_to_csv(const Series& f)
{
    std::ostringstream os;
    os << "n,ex,ey,coeff\n";
    for (int n = 0; n <= f.order(); ++n)
        for (const auto& [m, c] : f.coeff(n).terms())
            os << n << "," << m.ex << "," << m.ey << "," << to_string(c) << "\n";
    return os.str();
}

std::string series_to_json(const NamedSeries& named)
{
    nlohmann::ordered_json obj;
    obj["name"] = named.name;
    obj["description"] = named.description;
    obj["order"] = named.series.order();
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (int n = 0; n <= named.series.order(); ++n)
        for (const auto& [m, c] : named.series.coeff(n).terms())
            terms.push_back({{"n", n},
                             {"ex", m.ex},
                             {"ey", m.ey},
                             {"coeff", to_string(c)}});
    obj["terms"] = std::move(terms);
    return obj.dump(2) + "\n";
}

namespace {

template <typename Row> void walk_rows(const WalkTable& table, Row&& emit)
{
    for (int n = 1; n <= table.max_steps(); ++n)
        for (int i = -n; i <= n; ++i)
            for (int j = -n; j <= n; ++j) {
                const Integer& c = table.count(n, i, j);
                if (c != 0)
                    emit(n, i, j, c);
            }
}

} // namespace

std::string table_to_csv(const WalkTable& table)
{
    std::ostringstream os;
    os << "n,i,j,count\n";
    walk_rows(table, [&](int n, int i, int j, const Integer& c) {
        os << n << "," << i << "," << j << "," << c.get_str() << "\n";
    });
    return os.str();
}

std::string table_to_plain(const WalkTable& table)
{
    std::ostringstream os;
    walk_rows(table, [&](int n, int i, int j, const Integer& c) {
        os << "a(" << n << ", " << i << ", " << j << ") = " << c.get_str() << "\n";
    });
    return os.str();
}

std::string table_to_json(const WalkTable& table)
{
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    walk_rows(table, [&](int n, int i, int j, const Integer& c) {
        arr.push_back({{"n", n}, {"i", i}, {"j", j}, {"count", c.get_str()}});
    });
    return arr.dump(2) + "\n";
}

std::string closed_form_to_csv(const std::vector<ClosedFormRow>& rows)
{
    std::ostringstream os;
    os << "i,n,a_neg,a_pos,dp_checked\n";
    for (const ClosedFormRow& r : rows)
        os << r.i << "," << r.n << "," << r.lower.get_str() << ","
           << r.upper.get_str() << "," << (r.dp_checked ? "true" : "false") << "\n";
    return os.str();
}

std::string closed_form_to_plain(const std::vector<ClosedFormRow>& rows)
{
    std::ostringstream os;
    for (const ClosedFormRow& r : rows)
        os << "i=" << r.i << " n=" << r.n << " a(-i,-i)(2n)=" << r.lower.get_str()
           << " a(i,i)(2n)=" << r.upper.get_str()
           << " dp_checked=" << (r.dp_checked ? "yes" : "no") << "\n";
    return os.str();
}

std::string closed_form_to_json(const std::vector<ClosedFormRow>& rows)
{
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const ClosedFormRow& r : rows)
        arr.push_back({{"i", r.i},
                       {"n", r.n},
                       {"a_neg", r.lower.get_str()},
                       {"a_pos", r.upper.get_str()},
                       {"dp_checked", r.dp_checked}});
    return arr.dump(2) + "\n";
}

} // namespace slitplane
