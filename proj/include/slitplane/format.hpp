#pragma once

#include "slitplane/catalog.hpp"
#include "slitplane/walks.hpp"

#include <string>
#include <vector>

namespace slitplane {

// Canonical plain rendering: ascending t-power, then lexicographic (ex, ey);
// e.g. "1 + t + 2*t^2" or "x^-1*t + x*t".
std::string series_to_plain(const Series& f);
// Header "n,ex,ey,coeff", one row per term in canonical order.
std::string series_to_csv(const Series& f);
std::string series_to_json(const NamedSeries& named);

// Walk-count rows (n >= 1, nonzero entries only), ordered by n, then i, then j.
std::string table_to_csv(const WalkTable& table);   // header "n,i,j,count"
std::string table_to_plain(const WalkTable& table);
std::string table_to_json(const WalkTable& table);

struct ClosedFormRow {
    int i;
    long n;
    Integer lower; // a_{-i,-i}(2n)
    Integer upper; // a_{i,i}(2n)
    bool dp_checked;
};

std::string closed_form_to_csv(const std::vector<ClosedFormRow>& rows);
std::string closed_form_to_plain(const std::vector<ClosedFormRow>& rows);
std::string closed_form_to_json(const std::vector<ClosedFormRow>& rows);

} // namespace slitplane
