#include "ising/entropy_stats.hpp"

#include <cmath>
#include <stdexcept>

namespace ising {

EntropyStats make_entropy_stats(double S, double D)
{
    if (!(S >= 0.0) || !(D >= 0.0))
        throw std::domain_error("make_entropy_stats: moments must be nonnegative");
    EntropyStats st;
    st.S = S;
    st.D = D;
    st.dS = std::sqrt(D);
    st.second_moment = D + S * S;
    if (S >= 1e-14)
        st.delta = st.dS / S;
    return st;
}

} // namespace ising
