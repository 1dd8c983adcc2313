#include "darboux/potentials.hpp"

namespace darboux {

int PotentialFamily::ordinal(int label) const {
    const int ord = label - base_index;
    if (ord < 0 || ord >= levels())
        throw IndexError(name + " family has no eigenfunction with label " + std::to_string(label));
    return ord;
}

const EigenPair& PotentialFamily::pair(int label) const {
    return eigenpairs[static_cast<std::size_t>(ordinal(label))];
}

Jet log_derivative(const EigenPair& e, double x, int order) {
    const Jet p = e.wavefunction(x, order + 1);
    return p.derivative_jet() / p.truncated(order);
}

}  // namespace darboux
