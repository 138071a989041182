#include "slitplane/walks.hpp"

#include "slitplane/errors.hpp"

namespace slitplane {

const Integer WalkTable::zero_ = 0;

WalkTable::WalkTable(int max_steps) : max_steps_(max_steps), side_(2 * max_steps + 1)
{
    if (max_steps < 0)
        throw DomainError("max_steps must be nonnegative");
    layers_.resize(static_cast<std::size_t>(max_steps) + 1);
    for (auto& layer : layers_)
        layer.assign(static_cast<std::size_t>(side_) * side_, Integer(0));
}

const Integer& WalkTable::count(int n, int i, int j) const
{
    if (n < 0 || n > max_steps_ || i < -n || i > n || j < -n || j > n)
        return zero_;
    const auto idx = static_cast<std::size_t>(i + max_steps_) * side_ + (j + max_steps_);
    return layers_[static_cast<std::size_t>(n)][idx];
}

Integer& WalkTable::at(int n, int i, int j)
{
    const auto idx = static_cast<std::size_t>(i + max_steps_) * side_ + (j + max_steps_);
    return layers_[static_cast<std::size_t>(n)][idx];
}

WalkTable enumerate(int max_steps)
{
    WalkTable table(max_steps);
    table.at(0, 0, 0) = 1;
    for (int n = 1; n <= max_steps; ++n) {
        for (int i = -n; i <= n; ++i) {
            for (int j = -n; j <= n; ++j) {
                if (on_slit(i, j))
                    continue;
                if (std::abs(i) + std::abs(j) > n || ((i + j + n) & 1))
                    continue;
                Integer& c = table.at(n, i, j);
                c = table.count(n - 1, i - 1, j);
                c += table.count(n - 1, i + 1, j);
                c += table.count(n - 1, i, j - 1);
                c += table.count(n - 1, i, j + 1);
            }
        }
    }
    return table;
}

namespace {

void walk_all(WalkTable& table, int n, int i, int j, int max_steps)
{
    table.at(n, i, j) += 1;
    if (n == max_steps)
        return;
    static const int di[4] = {1, -1, 0, 0};
    static const int dj[4] = {0, 0, 1, -1};
    for (int s = 0; s < 4; ++s) {
        const int ni = i + di[s], nj = j + dj[s];
        if (!on_slit(ni, nj))
            walk_all(table, n + 1, ni, nj, max_steps);
    }
}

} // namespace

WalkTable enumerate_exhaustive(int max_steps)
{
    if (max_steps > 12)
        throw DomainError("exhaustive listing is limited to 12 steps");
    WalkTable table(max_steps);
    walk_all(table, 0, 0, 0, max_steps);
    return table;
}

Series endpoint_series(const WalkTable& table, int i, int j)
{
    Series s(table.max_steps());
    for (int n = 0; n <= table.max_steps(); ++n)
        s.set_coeff(n, Laurent(Rational(table.count(n, i, j))));
    return s;
}

Series full_series(const WalkTable& table)
{
    Series s(table.max_steps());
    for (int n = 0; n <= table.max_steps(); ++n) {
        Laurent c;
        for (int i = -n; i <= n; ++i)
            for (int j = -n; j <= n; ++j) {
                const Integer& a = table.count(n, i, j);
                if (a != 0)
                    c.set(i, j, Rational(a));
            }
        s.set_coeff(n, std::move(c));
    }
    return s;
}

Series diagonal_series(const WalkTable& table)
{
    Series s(table.max_steps());
    for (int n = 0; n <= table.max_steps(); ++n) {
        Laurent c;
        for (int i = -n; i <= n; ++i) {
            const Integer& a = table.count(n, i, i);
            if (a != 0)
                c.set(0, i, Rational(a));
        }
        s.set_coeff(n, std::move(c));
    }
    return s;
}

} // namespace slitplane
