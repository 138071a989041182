#include "slitplane/laurent.hpp"

#include "slitplane/errors.hpp"

#include <sstream>
#include <utility>

namespace slitplane {

Laurent::Laurent(const Rational& c)
{
    if (c != 0)
        terms_.emplace(Monomial{0, 0}, c);
}

Laurent::Laurent(long c)
{
    if (c != 0)
        terms_.emplace(Monomial{0, 0}, Rational(c));
}

Laurent Laurent::monomial(const Rational& c, int ex, int ey)
{
    Laurent p;
    if (c != 0)
        p.terms_.emplace(Monomial{ex, ey}, c);
    return p;
}

Laurent Laurent::from_map(std::map<Monomial, Rational> m)
{
    Laurent p;
    p.terms_ = std::move(m);
    for (auto it = p.terms_.begin(); it != p.terms_.end();) {
        if (it->second == 0)
            it = p.terms_.erase(it);
        else
            ++it;
    }
    return p;
}

bool Laurent::is_scalar() const
{
    if (terms_.empty())
        return true;
    return terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0};
}

Rational Laurent::scalar_part() const
{
    return coeff(0, 0);
}

Rational Laurent::coeff(int ex, int ey) const
{
    auto it = terms_.find(Monomial{ex, ey});
    return it == terms_.end() ? Rational(0) : it->second;
}

void Laurent::set(int ex, int ey, const Rational& c)
{
    if (c == 0)
        terms_.erase(Monomial{ex, ey});
    else
        terms_[Monomial{ex, ey}] = c;
}

Laurent& Laurent::operator+=(const Laurent& o)
{
    for (const auto& [m, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o)
{
    for (const auto& [m, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(m, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }
    return *this;
}

Laurent Laurent::operator-() const
{
    Laurent r;
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, -c);
    return r;
}

Laurent operator*(const Laurent& a, const Laurent& b)
{
    std::map<Monomial, Rational> acc;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m{ma.ex + mb.ex, ma.ey + mb.ey};
            auto [it, inserted] = acc.emplace(m, ca * cb);
            if (!inserted)
                it->second += ca * cb;
        }
    }
    return Laurent::from_map(std::move(acc));
}

Laurent Laurent::scaled(const Rational& c) const
{
    if (c == 0)
        return Laurent();
    Laurent r;
    for (const auto& [m, v] : terms_)
        r.terms_.emplace(m, v * c);
    return r;
}

Laurent Laurent::ct(char var) const
{
    Laurent r;
    for (const auto& [m, c] : terms_) {
        int e = (var == 'x') ? m.ex : m.ey;
        if (e == 0)
            r.terms_.emplace(m, c);
    }
    return r;
}

Laurent Laurent::slice_x(int k) const
{
    Laurent r;
    for (const auto& [m, c] : terms_)
        if (m.ex == k)
            r.terms_.emplace(Monomial{0, m.ey}, c);
    return r;
}

Laurent Laurent::slice_y(int k) const
{
    Laurent r;
    for (const auto& [m, c] : terms_)
        if (m.ey == k)
            r.terms_.emplace(Monomial{m.ex, 0}, c);
    return r;
}

Laurent Laurent::truncate_y(int lo, int hi) const
{
    Laurent r;
    for (const auto& [m, c] : terms_)
        if (m.ey >= lo && m.ey <= hi)
            r.terms_.emplace(m, c);
    return r;
}

Laurent Laurent::subst(const SignedMonomial& x_img, const SignedMonomial& y_img) const
{
    std::map<Monomial, Rational> acc;
    for (const auto& [m, c] : terms_) {
        Monomial img{m.ex * x_img.ex + m.ey * y_img.ex,
                     m.ex * x_img.ey + m.ey * y_img.ey};
        bool neg = (x_img.sign < 0 && (m.ex & 1)) != (y_img.sign < 0 && (m.ey & 1));
        auto [it, inserted] = acc.emplace(img, neg ? -c : c);
        if (!inserted)
            it->second += neg ? -c : c;
    }
    return from_map(std::move(acc));
}

Laurent Laurent::dx() const
{
    Laurent r;
    for (const auto& [m, c] : terms_)
        if (m.ex != 0)
            r.terms_.emplace(Monomial{m.ex - 1, m.ey}, c * m.ex);
    return r;
}

int Laurent::min_ex() const
{
    if (terms_.empty())
        throw DomainError("min_ex of zero polynomial");
    int e = terms_.begin()->first.ex;
    for (const auto& [m, c] : terms_)
        e = std::min(e, m.ex);
    return e;
}

int Laurent::max_ex() const
{
    if (terms_.empty())
        throw DomainError("max_ex of zero polynomial");
    // map is ordered by (ex, ey), so the largest ex is at the back
    return terms_.rbegin()->first.ex;
}

int Laurent::min_ey() const
{
    if (terms_.empty())
        throw DomainError("min_ey of zero polynomial");
    int e = terms_.begin()->first.ey;
    for (const auto& [m, c] : terms_)
        e = std::min(e, m.ey);
    return e;
}

int Laurent::max_ey() const
{
    if (terms_.empty())
        throw DomainError("max_ey of zero polynomial");
    int e = terms_.begin()->first.ey;
    for (const auto& [m, c] : terms_)
        e = std::max(e, m.ey);
    return e;
}

// Exact division: shift both operands to the polynomial corner, divide by
// the single divisor under lex order, shift back. For exact multiples the
// leading-term step never fails, so any failure means "not divisible".
Laurent Laurent::div_exact(const Laurent& d) const
{
    if (d.is_zero())
        throw ExactDivisionError("division by the zero polynomial");
    if (is_zero())
        return Laurent();

    const int px = min_ex(), py = min_ey();
    const int dx_ = d.min_ex(), dy_ = d.min_ey();

    std::map<Monomial, Rational> rem;
    for (const auto& [m, c] : terms_)
        rem.emplace(Monomial{m.ex - px, m.ey - py}, c);
    std::map<Monomial, Rational> div;
    for (const auto& [m, c] : d.terms_)
        div.emplace(Monomial{m.ex - dx_, m.ey - dy_}, c);

    const Monomial lt_d = div.rbegin()->first;
    const Rational lc_d = div.rbegin()->second;

    std::map<Monomial, Rational> quot;
    while (!rem.empty()) {
        const Monomial lt_r = rem.rbegin()->first;
        const Rational lc_r = rem.rbegin()->second;
        const Monomial q{lt_r.ex - lt_d.ex, lt_r.ey - lt_d.ey};
        if (q.ex < 0 || q.ey < 0)
            throw ExactDivisionError("Laurent division leaves a remainder");
        const Rational qc = lc_r / lc_d;
        quot.emplace(q, qc);
        for (const auto& [m, c] : div) {
            Monomial t{m.ex + q.ex, m.ey + q.ey};
            auto [it, inserted] = rem.emplace(t, -qc * c);
            if (!inserted) {
                it->second -= qc * c;
                if (it->second == 0)
                    rem.erase(it);
            } else if (it->second == 0) {
                rem.erase(it);
            }
        }
    }

    std::map<Monomial, Rational> shifted;
    const int sx = px - dx_, sy = py - dy_;
    for (auto& [m, c] : quot)
        shifted.emplace(Monomial{m.ex + sx, m.ey + sy}, std::move(c));
    return from_map(std::move(shifted));
}

Rational Laurent::eval_at_one() const
{
    Rational s = 0;
    for (const auto& [m, c] : terms_)
        s += c;
    return s;
}

std::string to_string(const Laurent& p)
{
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
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
        bool has_var = (m.ex != 0 || m.ey != 0);
        bool printed = false;
        if (!has_var || a != 1) {
            os << to_string(a);
            printed = true;
        }
        if (m.ex != 0) {
            if (printed)
                os << "*";
            os << (m.ex == 1 ? "x" : "x^" + std::to_string(m.ex));
            printed = true;
        }
        if (m.ey != 0) {
            if (printed)
                os << "*";
            os << (m.ey == 1 ? "y" : "y^" + std::to_string(m.ey));
        }
        first = false;
    }
    return os.str();
}

} // namespace slitplane
