#include "chered/rational.hpp"

#include <stdexcept>

namespace chered {

std::optional<Rat> parse_rat(const std::string& s) {
    if (s.empty()) return std::nullopt;
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class num(s);
            return Rat(num);
        }
        const std::string nums = s.substr(0, slash);
        const std::string dens = s.substr(slash + 1);
        if (nums.empty() || dens.empty() || dens.find('/') != std::string::npos)
            return std::nullopt;
        mpz_class num(nums), den(dens);
        if (den == 0) return std::nullopt;
        Rat r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

std::string rat_str(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

long rat_to_long(const Rat& r) {
    if (!is_integer(r)) throw std::domain_error("rat_to_long: not an integer: " + rat_str(r));
    if (!r.get_num().fits_slong_p()) throw std::domain_error("rat_to_long: out of range");
    return r.get_num().get_si();
}

long rat_denominator(const Rat& r) {
    if (!r.get_den().fits_slong_p()) throw std::domain_error("rat_denominator: out of range");
    return r.get_den().get_si();
}

}  // namespace chered
