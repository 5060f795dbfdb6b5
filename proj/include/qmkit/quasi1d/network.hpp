// network.hpp -- quantum graphs: bonds with lengths and flux phases, vertex
// scatterers, and the secular equation det(J e^{ikL} S - 1) = 0 on the
// doubled (directed-bond) space.

#pragma once

#include "qmkit/core/types.hpp"
#include "qmkit/quasi1d/scatter.hpp"

#include <functional>
#include <vector>

namespace qmkit::quasi1d {

// One undirected bond contributes two directed bonds a and a~; the flux
// phase obeys phi(a~) = -phi(a) by construction.
struct Bond {
    int from = 0;
    int to = 0;
    double length = 1.0;
    double flux_phase = 0.0;  // phase picked up traversing from -> to
};

// Vertex scatterer: unitary matrix over the directed bonds leaving the
// vertex, as a function of energy.  Ordering of legs follows the order the
// incident bonds were added.
using VertexSMatrix = std::function<ComplexMatrix(double energy, int legs)>;

struct Network {
    std::vector<Bond> bonds;
    // per-vertex scatterer builders; missing entries default to the
    // transparent (u = 0) delta junction
    std::vector<VertexSMatrix> vertex_scatterers;
    double mass = 1.0;

    int vertex_count() const;
    int directed_count() const { return 2 * static_cast<int>(bonds.size()); }

    // directed-bond data: bond d = 2*b is bonds[b] forward, d = 2*b+1 reversed
    double directed_length(int d) const { return bonds[d / 2].length; }
    double directed_phase(int d) const {
        return (d % 2 == 0) ? bonds[d / 2].flux_phase : -bonds[d / 2].flux_phase;
    }
    int directed_origin(int d) const { return (d % 2 == 0) ? bonds[d / 2].from : bonds[d / 2].to; }

    // permutation pairing each directed bond with its reversal (an involution)
    int pair(int d) const { return d ^ 1; }

    // bond scattering matrix J e^{ikL} S at energy E (dimension 2b x 2b)
    ComplexMatrix bond_matrix(double energy) const;
};

// delta junction of strength u as a vertex builder, in the
// physical-amplitude convention (transparent for u = 0)
VertexSMatrix delta_vertex(double u, double mass = 1.0);

struct NetworkLevel {
    double energy;
    int multiplicity;
};

// Real eigenvalues of the graph in (e_min, e_max].  Roots of the secular
// determinant are located through the factorization det(U - 1) =
// (2i)^M exp(i Theta/2) prod sin(theta_r / 2) with Theta = arg det U tracked
// continuously in E: the product is a real function with sign changes at
// simple roots, while degenerate roots are caught by the winding of Theta.
std::vector<NetworkLevel> network_spectrum(const Network& net, double e_min, double e_max,
                                           int grid = 4001);

}  // namespace qmkit::quasi1d
