#include "cobordism/monomial.hpp"

#include <algorithm>
#include <functional>

namespace cobordism {

std::string render_monomial(const Exponents& e, const std::vector<std::string>& names)
{
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += names.at(i);
        if (e[i] != 1) out += '^' + std::to_string(e[i]);
    }
    return out;
}

std::string lazard_generator_name(std::size_t index)
{
    return "m" + std::to_string(index);
}

std::vector<Exponents> monomials_of_degree(std::size_t nvars, int d)
{
    std::vector<Exponents> out;
    if (d < 0) return out;
    if (nvars == 0) {
        if (d == 0) out.emplace_back();
        return out;
    }
    Exponents cur(nvars, 0);
    // Lex-descending enumeration equals SeriesOrder within one degree.
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i + 1 == nvars) {
            cur[i] = left;
            out.push_back(cur);
            return;
        }
        for (int k = left; k >= 0; --k) {
            cur[i] = k;
            rec(i + 1, left - k);
        }
    };
    rec(0, d);
    return out;
}

std::vector<Exponents> lazard_monomials_of_weight(int max_generator, int w)
{
    std::vector<Exponents> out;
    if (w < 0) return out;
    if (w == 0) {
        out.emplace_back();
        return out;
    }
    if (max_generator <= 0) return out;
    Exponents cur(static_cast<std::size_t>(max_generator), 0);
    std::function<void(int, int)> rec = [&](int gen, int left) {
        // gen counts down so that larger exponents of m1 come first.
        if (gen == 0) {
            if (left == 0) {
                Exponents e = cur;
                trim_trailing_zeros(e);
                out.push_back(std::move(e));
            }
            return;
        }
        for (int k = left / gen; k >= 0; --k) {
            cur[static_cast<std::size_t>(gen - 1)] = k;
            rec(gen - 1, left - k * gen);
        }
        cur[static_cast<std::size_t>(gen - 1)] = 0;
    };
    rec(max_generator, w);
    std::sort(out.begin(), out.end(), LazardOrder{});
    return out;
}

} // namespace cobordism
