#include "lawvere/natural.hpp"

#include <algorithm>
#include <cctype>

namespace lawvere {

Natural cantor_pair(const Natural& a, const Natural& b)
{
    Natural s = a + b;
    Natural t = s * (s + 1);
    mpz_fdiv_q_2exp(t.get_mpz_t(), t.get_mpz_t(), 1);
    return t + b;
}

std::pair<Natural, Natural> cantor_unpair(const Natural& p)
{
    // w is the largest integer with w(w+1)/2 <= p.
    Natural disc = 8 * p + 1;
    Natural root;
    mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
    Natural w = root - 1;
    mpz_fdiv_q_2exp(w.get_mpz_t(), w.get_mpz_t(), 1);
    Natural tri = w * (w + 1);
    mpz_fdiv_q_2exp(tri.get_mpz_t(), tri.get_mpz_t(), 1);
    Natural b = p - tri;
    Natural a = w - b;
    return {std::move(a), std::move(b)};
}

std::string to_decimal(const Natural& n)
{
    return n.get_str(10);
}

std::optional<Natural> parse_decimal(std::string_view text)
{
    if (text.empty() || !std::all_of(text.begin(), text.end(),
                                     [](unsigned char c) { return std::isdigit(c) != 0; })) {
        return std::nullopt;
    }
    return Natural{std::string(text), 10};
}

std::size_t decimal_digits(const Natural& n)
{
    // mpz_sizeinbase may overestimate by one for base 10.
    if (n < 10) {
        return 1;
    }
    return to_decimal(n).size();
}

} // namespace lawvere
