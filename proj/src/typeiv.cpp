#include <degen/typeiv.hpp>

#include <initializer_list>
#include <stdexcept>
#include <utility>

namespace degen {

namespace {

const DivisorBasis Y_TILDE{BasisId::y_tilde, "Ytilde", {"F", "Dt", "S", "E1", "E2", "E3", "E4"}};
const DivisorBasis Y_PRIME{BasisId::y_prime, "Y'", {"F", "D'", "E'1"}};
const DivisorBasis Y_ONE{BasisId::y_one, "Y1", {"F", "D1", "Sigma1"}};

std::vector<Rat> rats(std::initializer_list<Rat> xs) { return std::vector<Rat>(xs); }

std::vector<Check> compare_vectors(const std::string& label, const DivisorVector& got,
                                   const DivisorVector& want) {
    const DivisorBasis& b = basis(want.basis_id);
    std::vector<Check> checks;
    for (size_t i = 0; i < b.elements.size(); ++i) {
        checks.push_back(eq_check(label + " @" + b.elements[i], rat_str(want.coords[i]),
                                  rat_str(got.coords[i])));
    }
    return checks;
}

}  // namespace

const DivisorBasis& basis(BasisId id) {
    switch (id) {
        case BasisId::y_tilde: return Y_TILDE;
        case BasisId::y_prime: return Y_PRIME;
        case BasisId::y_one: return Y_ONE;
    }
    throw std::invalid_argument("unknown basis");
}

DivisorVector::DivisorVector(BasisId b, std::vector<Rat> c) : basis_id(b), coords(std::move(c)) {
    if (coords.size() != basis(b).elements.size())
        throw std::invalid_argument("coordinate count does not match basis " + basis(b).name);
}

DivisorVector DivisorVector::operator+(const DivisorVector& o) const {
    if (basis_id != o.basis_id) throw std::invalid_argument("adding vectors in different bases");
    std::vector<Rat> sum(coords.size());
    for (size_t i = 0; i < coords.size(); ++i) sum[i] = coords[i] + o.coords[i];
    return {basis_id, std::move(sum)};
}

DivisorVector operator*(const Rat& s, const DivisorVector& v) {
    std::vector<Rat> out(v.coords.size());
    for (size_t i = 0; i < v.coords.size(); ++i) out[i] = s * v.coords[i];
    return {v.basis_id, std::move(out)};
}

bool DivisorVector::operator==(const DivisorVector& o) const {
    return basis_id == o.basis_id && coords == o.coords;
}

std::string DivisorVector::str() const {
    std::string s = "(";
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ",";
        s += rat_str(coords[i]);
    }
    return s + ")";
}

DivisorVector PullbackMap::apply(const DivisorVector& v) const {
    if (v.basis_id != from) throw std::invalid_argument("pullback applied to wrong basis");
    size_t dim = basis(to).elements.size();
    std::vector<Rat> out(dim, Rat(0));
    for (size_t j = 0; j < columns.size(); ++j)
        for (size_t i = 0; i < dim; ++i) out[i] += v.coords[j] * columns[j][i];
    return {to, std::move(out)};
}

const PullbackMap& tau_pullback() {
    static const PullbackMap map{
        BasisId::y_prime,
        BasisId::y_tilde,
        {
            rats({1, 0, 0, 0, 0, 0, 0}),                            // tau^*F
            rats({0, 1, 1, 0, rat(1, 2), rat(1, 2), 1}),            // tau^*D'
            rats({0, 0, 1, 1, 1, rat(1, 2), rat(1, 2)}),            // tau^*E'_1
        },
    };
    return map;
}

DivisorVector anti_canonical(BasisId id) {
    switch (id) {
        case BasisId::y_tilde: return {id, rats({12, 4, 6, 2, 4, 3, 5})};
        case BasisId::y_prime: return {id, rats({12, 4, 2})};
        case BasisId::y_one: return {id, rats({12, 4, 6})};
    }
    throw std::invalid_argument("unknown basis");
}

DivisorVector phi_h() { return {BasisId::y_prime, rats({3, 1, rat(1, 2)})}; }

DivisorVector psi_h() { return {BasisId::y_one, rats({3, 1, rat(3, 2)})}; }

const char* y0_anticanonical_display() { return "6*Sigma + 12*F"; }

std::vector<Check> verify_crepant_tau() {
    DivisorVector pulled = tau_pullback().apply(anti_canonical(BasisId::y_prime));
    return compare_vectors("tau^*(-K_Y')", pulled, anti_canonical(BasisId::y_tilde));
}

std::vector<Check> verify_hyperplane() {
    std::vector<Check> checks =
        compare_vectors("4*phi^*H", rat(4) * phi_h(), anti_canonical(BasisId::y_prime));
    std::vector<Check> psi =
        compare_vectors("4*psi^*H", rat(4) * psi_h(), anti_canonical(BasisId::y_one));
    checks.insert(checks.end(), psi.begin(), psi.end());
    return checks;
}

Parity parity_admissible(long d) {
    if (d < 4) throw std::domain_error("degree must be >= 4, got " + std::to_string(d));
    return {d % 4 == 0, rat(d, 2)};
}

std::vector<TaggedFact> singularity_membership(long d) {
    if (!parity_admissible(d).admissible) return {};
    return {
        {"branch-smooth", "the branch surface of degree " + std::to_string(d) + " is smooth"},
        {"branch-avoids-singularity",
         "the branch surface does not contain the unique singular point of the cone"},
        {"branch-pencil", "the branch surface is composed of a pencil of curves"},
    };
}

}  // namespace degen
