#include "cobordism/graded_coeff.hpp"

#include <algorithm>
#include <limits>

#include "cobordism/errors.hpp"

namespace cobordism {

GradedCoeff::GradedCoeff(const Rational& q)
{
    if (q != 0) {
        Rational c = q;
        c.canonicalize();
        terms_.emplace(Exponents{}, c);
    }
}

GradedCoeff GradedCoeff::generator(int index)
{
    if (index < 1) throw Error(ErrorKind::InvalidArgument, "Lazard generator index must be >= 1");
    Exponents e(static_cast<std::size_t>(index), 0);
    e.back() = 1;
    return monomial(std::move(e), Rational(1));
}

GradedCoeff GradedCoeff::monomial(Exponents e, const Rational& c)
{
    GradedCoeff out;
    trim_trailing_zeros(e);
    out.add_term(e, c);
    return out;
}

bool GradedCoeff::is_rational() const noexcept
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational GradedCoeff::rational_part() const
{
    return coefficient(Exponents{});
}

Rational GradedCoeff::coefficient(const Exponents& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> GradedCoeff::homogeneous_degree() const
{
    if (terms_.empty()) return std::nullopt;
    int w = lazard_weight(terms_.begin()->first);
    if (lazard_weight(terms_.rbegin()->first) != w) return std::nullopt;
    return -w;
}

int GradedCoeff::min_weight() const
{
    return terms_.empty() ? 0 : lazard_weight(terms_.begin()->first);
}

int GradedCoeff::max_weight() const
{
    return terms_.empty() ? 0 : lazard_weight(terms_.rbegin()->first);
}

int GradedCoeff::max_generator() const
{
    std::size_t g = 0;
    for (const auto& [e, c] : terms_) g = std::max(g, e.size());
    return static_cast<int>(g);
}

GradedCoeff GradedCoeff::degree_component(int degree) const
{
    GradedCoeff out;
    for (const auto& [e, c] : terms_)
        if (-lazard_weight(e) == degree) out.terms_.emplace(e, c);
    return out;
}

void GradedCoeff::add_term(const Exponents& e, const Rational& c)
{
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

GradedCoeff& GradedCoeff::operator+=(const GradedCoeff& o)
{
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

GradedCoeff& GradedCoeff::operator-=(const GradedCoeff& o)
{
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

GradedCoeff& GradedCoeff::operator*=(const Rational& q)
{
    if (q == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= q;
    return *this;
}

GradedCoeff GradedCoeff::operator-() const
{
    GradedCoeff r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

GradedCoeff operator*(const GradedCoeff& a, const GradedCoeff& b)
{
    GradedCoeff out;
    if (a.is_zero() || b.is_zero()) return out;
    if (b.terms_.size() == 1 && b.terms_.begin()->first.empty()) return a * b.terms_.begin()->second;
    if (a.terms_.size() == 1 && a.terms_.begin()->first.empty()) return b * a.terms_.begin()->second;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term(add_exponents(ea, eb), ca * cb);
    return out;
}

GradedCoeff GradedCoeff::specialize(const std::function<std::optional<Rational>(int)>& value) const
{
    GradedCoeff out;
    for (const auto& [e, c] : terms_) {
        Exponents kept;
        Rational factor = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            auto v = value(static_cast<int>(i + 1));
            if (v) {
                Rational p = 1;
                for (int k = 0; k < e[i]; ++k) p *= *v;
                factor *= p;
            } else {
                if (kept.size() <= i) kept.resize(i + 1, 0);
                kept[i] = e[i];
            }
        }
        trim_trailing_zeros(kept);
        out.add_term(kept, factor);
    }
    return out;
}

GradedCoeff GradedCoeff::truncate_generators(int max_generator) const
{
    GradedCoeff out;
    for (const auto& [e, c] : terms_)
        if (static_cast<int>(e.size()) <= max_generator) out.terms_.emplace(e, c);
    return out;
}

namespace {
std::vector<std::string> generator_names(std::size_t n)
{
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(lazard_generator_name(i + 1));
    return names;
}
} // namespace

std::string GradedCoeff::render() const
{
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational mag = abs(c);
        bool negative = c < 0;
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        std::string mono = render_monomial(e, generator_names(e.size()));
        if (mono.empty()) {
            out += to_string(mag);
        } else {
            if (mag != 1) out += to_string(mag) + "*";
            out += mono;
        }
        first = false;
    }
    return out;
}

} // namespace cobordism
