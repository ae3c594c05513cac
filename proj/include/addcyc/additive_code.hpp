#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cyclotomic.hpp"
#include "linalg.hpp"
#include "quadfield.hpp"

namespace addcyc {

/*
 * Shape of one component C_i inside N_i = <(x^n-1)/f_i>:
 *   Zero        - the trivial subcode
 *   OneGenPlain - <theta_i>, one generator without an omega part
 *   OneGenOmega - <theta_i (omega + s(x))> with deg s < deg f_i
 *   FullN       - all of N_i (two generators theta_i and omega theta_i)
 * F_p-dimensions are 0, deg f_i, deg f_i and 2 deg f_i respectively.
 */
enum class ComponentKind { Zero, OneGenPlain, OneGenOmega, FullN };

struct ComponentForm {
    ComponentKind kind = ComponentKind::Zero;
    Poly s;  // parameter of OneGenOmega; empty otherwise

    static ComponentForm zero() { return {ComponentKind::Zero, Poly::zero()}; }
    static ComponentForm plain() { return {ComponentKind::OneGenPlain, Poly::zero()}; }
    static ComponentForm omega(Poly s) { return {ComponentKind::OneGenOmega, std::move(s)}; }
    static ComponentForm full() { return {ComponentKind::FullN, Poly::zero()}; }

    bool operator==(const ComponentForm& o) const noexcept { return kind == o.kind && s == o.s; }
    bool operator!=(const ComponentForm& o) const noexcept { return !(*this == o); }

    std::size_t generator_count() const noexcept {
        switch (kind) {
            case ComponentKind::Zero: return 0;
            case ComponentKind::FullN: return 2;
            default: return 1;
        }
    }
};

/*
 * An additive cyclic code over F_{p^2}: an F_p[x]-submodule of
 * F_{p^2}[x]/<x^n - 1>, held in its canonical per-component form together
 * with the unique generator triple (g, k, h) meaning C = <g + omega k, omega h>
 * and an F_p generator matrix with columns (a-part | b-part).
 *
 * Objects are immutable after construction and safe to share across threads.
 */
class AdditiveCyclicCode {
   public:
    static AdditiveCyclicCode from_components(std::shared_ptr<const CosetStructure> cs,
                                              std::vector<ComponentForm> comps) {
        return AdditiveCyclicCode(std::move(cs), std::move(comps));
    }

    // smallest F_p[x]-submodule containing the given ring elements
    static AdditiveCyclicCode from_generators(std::shared_ptr<const CosetStructure> cs,
                                              const std::vector<QuadRingElem>& gens) {
        std::vector<ComponentForm> comps(cs->num_cosets(), ComponentForm::zero());
        for (std::size_t i = 0; i < cs->num_cosets(); ++i)
            comps[i] = classify_projections(*cs, gens, i);
        return AdditiveCyclicCode(std::move(cs), std::move(comps));
    }

    static AdditiveCyclicCode zero_code(std::shared_ptr<const CosetStructure> cs) {
        std::vector<ComponentForm> comps(cs->num_cosets(), ComponentForm::zero());
        return AdditiveCyclicCode(std::move(cs), std::move(comps));
    }

    static AdditiveCyclicCode full_ring(std::shared_ptr<const CosetStructure> cs) {
        std::vector<ComponentForm> comps(cs->num_cosets(), ComponentForm::full());
        return AdditiveCyclicCode(std::move(cs), std::move(comps));
    }

    const CosetStructure& cosets() const noexcept { return *cs_; }
    std::shared_ptr<const CosetStructure> cosets_ptr() const noexcept { return cs_; }
    std::uint32_t p() const noexcept { return cs_->p; }
    std::size_t n() const noexcept { return cs_->n; }
    const std::vector<ComponentForm>& components() const noexcept { return comps_; }
    const Poly& gen_g() const noexcept { return g_; }
    const Poly& gen_k() const noexcept { return k_; }
    const Poly& gen_h() const noexcept { return h_; }
    std::size_t dimension() const noexcept { return dim_; }
    const FpMat& generator_matrix() const noexcept { return gen_matrix_; }

    bool operator==(const AdditiveCyclicCode& o) const noexcept {
        return cs_->p == o.cs_->p && cs_->n == o.cs_->n && comps_ == o.comps_;
    }
    bool operator!=(const AdditiveCyclicCode& o) const noexcept { return !(*this == o); }

    bool contains(const QuadRingElem& v) const {
        return in_row_space(cs_->field, rref_, pivots_, cs_->ring.to_fp_vector(v));
    }

    bool is_subcode_of(const AdditiveCyclicCode& other) const {
        for (std::size_t r = 0; r < gen_matrix_.rows; ++r)
            if (!in_row_space(cs_->field, other.rref_, other.pivots_, gen_matrix_.row(r)))
                return false;
        return true;
    }

    /*
     * F_{p^2}-linearity. Componentwise this means every C_i is Zero or FullN;
     * cross-checked against closure of the generator rows under scalar
     * multiplication by omega.
     */
    bool is_linear() const {
        bool structural = true;
        for (const auto& c : comps_)
            if (c.kind == ComponentKind::OneGenPlain || c.kind == ComponentKind::OneGenOmega) {
                structural = false;
                break;
            }
        bool closed = true;
        for (std::size_t r = 0; r < gen_matrix_.rows && closed; ++r) {
            QuadRingElem u = cs_->ring.from_fp_vector(gen_matrix_.row(r));
            closed = contains(cs_->ring.mul_omega(u));
        }
        if (structural != closed)
            throw std::logic_error("is_linear: component test disagrees with omega-closure test");
        return structural;
    }

    // generators as ring elements: g + omega k and omega h (omitted when zero)
    std::vector<QuadRingElem> canonical_generators() const {
        std::vector<QuadRingElem> gens;
        if (!g_.is_zero() || !k_.is_zero()) gens.push_back({g_, k_});
        if (!h_.is_zero()) gens.push_back({Poly::zero(), h_});
        return gens;
    }

    // direct sum of component subspaces; both codes must share (n, p)
    friend AdditiveCyclicCode code_sum(const AdditiveCyclicCode& A, const AdditiveCyclicCode& B) {
        if (A.p() != B.p() || A.n() != B.n())
            throw std::invalid_argument("code_sum: codes live in different rings");
        std::vector<ComponentForm> comps(A.comps_.size());
        for (std::size_t i = 0; i < comps.size(); ++i)
            comps[i] = component_join(A.comps_[i], B.comps_[i]);
        return AdditiveCyclicCode(A.cs_, std::move(comps));
    }

   private:
    AdditiveCyclicCode(std::shared_ptr<const CosetStructure> cs, std::vector<ComponentForm> comps)
        : cs_(std::move(cs)), comps_(std::move(comps)) {
        if (comps_.size() != cs_->num_cosets())
            throw std::invalid_argument("AdditiveCyclicCode: one component form per coset required");
        normalize_components();
        build_triple();
        build_matrix();
    }

    void normalize_components() {
        for (std::size_t i = 0; i < comps_.size(); ++i) {
            if (comps_[i].kind == ComponentKind::OneGenOmega) {
                comps_[i].s = poly_mod(cs_->field, comps_[i].s, cs_->factors[i]);
            } else {
                comps_[i].s = Poly::zero();
            }
        }
    }

    void build_triple() {
        const PrimeField& F = cs_->field;
        g_ = k_ = h_ = Poly::zero();
        for (std::size_t i = 0; i < comps_.size(); ++i) {
            const Poly& theta = cs_->cofactors[i];
            switch (comps_[i].kind) {
                case ComponentKind::Zero:
                    break;
                case ComponentKind::OneGenPlain:
                    g_ = poly_add(F, g_, theta);
                    break;
                case ComponentKind::OneGenOmega:
                    g_ = poly_add(F, g_, cyclic_mul(F, theta, comps_[i].s, cs_->n));
                    k_ = poly_add(F, k_, theta);
                    break;
                case ComponentKind::FullN:
                    g_ = poly_add(F, g_, theta);
                    h_ = poly_add(F, h_, theta);
                    break;
            }
        }
    }

    void build_matrix() {
        const PrimeField& F = cs_->field;
        const QuadRing& R = cs_->ring;
        gen_matrix_ = FpMat(0, 2 * cs_->n);
        dim_ = 0;
        for (std::size_t i = 0; i < comps_.size(); ++i) {
            const std::size_t m = cs_->coset_size(i);
            const Poly& theta = cs_->cofactors[i];
            std::vector<QuadRingElem> gens;
            switch (comps_[i].kind) {
                case ComponentKind::Zero:
                    break;
                case ComponentKind::OneGenPlain:
                    gens.push_back({theta, Poly::zero()});
                    break;
                case ComponentKind::OneGenOmega:
                    gens.push_back({cyclic_mul(F, theta, comps_[i].s, cs_->n), theta});
                    break;
                case ComponentKind::FullN:
                    gens.push_back({theta, Poly::zero()});
                    gens.push_back({Poly::zero(), theta});
                    break;
            }
            dim_ += m * gens.size();
            for (const auto& gen : gens)
                for (std::size_t t = 0; t < m; ++t)
                    gen_matrix_.append_row(R.to_fp_vector(R.shift(gen, t)));
        }
        rref_ = gen_matrix_;
        pivots_ = mat_rref(F, rref_);
        if (pivots_.size() != dim_)
            throw std::logic_error("AdditiveCyclicCode: generator matrix rank differs from dimension formula");
    }

    /*
     * Classifies the component generated by the projections of the given
     * elements into N_i. The primary route works in K_i = F_p[x]/<f_i>,
     * viewing N_i as the K_i-plane with basis {theta_i, omega theta_i};
     * the subcode is the K_i-span of the projected coordinate pairs.
     * An independent F_p-rank route cross-checks kind and row space.
     */
    static ComponentForm classify_projections(const CosetStructure& cs,
                                              const std::vector<QuadRingElem>& gens, std::size_t i) {
        const ExtensionField& K = cs.component_fields[i];
        const std::size_t m = cs.coset_size(i);

        std::vector<std::pair<ExtensionField::Elem, ExtensionField::Elem>> pairs;
        FpMat span(0, 2 * cs.n);
        for (const auto& u : gens) {
            QuadRingElem proj = project_component(cs, u, i);
            if (proj.is_zero()) continue;
            pairs.push_back(decompose_in_component(cs, proj, i));
            for (std::size_t t = 0; t < m; ++t)
                span.append_row(cs.ring.to_fp_vector(cs.ring.shift(proj, t)));
        }

        // K_i-Gaussian elimination on the column pair (a, b)
        ComponentForm form = ComponentForm::zero();
        std::pair<ExtensionField::Elem, ExtensionField::Elem> line;
        bool have_b_pivot = false, have_a_pivot = false;
        ExtensionField::Elem s_val = K.zero();
        for (auto& pr : pairs) {
            if (!K.is_zero(pr.second)) {
                if (!have_b_pivot) {
                    s_val = K.mul(pr.first, K.inv(pr.second));
                    have_b_pivot = true;
                } else {
                    // reduce: a - b * s_val must survive as a pure a-pivot to force FullN
                    ExtensionField::Elem red = K.sub(pr.first, K.mul(pr.second, s_val));
                    if (!K.is_zero(red)) have_a_pivot = true;
                }
            } else if (!K.is_zero(pr.first)) {
                have_a_pivot = true;
            }
        }
        if (have_b_pivot && have_a_pivot)
            form = ComponentForm::full();
        else if (have_b_pivot)
            form = ComponentForm::omega(K.to_poly(s_val));
        else if (have_a_pivot)
            form = ComponentForm::plain();

        // F_p-rank oracle on the raw projections
        const std::size_t rank = mat_rank(cs.field, span);
        const std::size_t expect = m * form.generator_count();
        if (rank != expect)
            throw std::logic_error("AdditiveCyclicCode: component rank oracle disagrees with field classification");
        if (form.kind != ComponentKind::Zero) {
            FpMat canon(0, 2 * cs.n);
            append_component_rows(cs, form, i, canon);
            if (row_space_signature(cs.field, span) != row_space_signature(cs.field, canon))
                throw std::logic_error("AdditiveCyclicCode: canonical component spans a different subspace");
        }
        return form;
    }

    static void append_component_rows(const CosetStructure& cs, const ComponentForm& form,
                                      std::size_t i, FpMat& out) {
        const Poly& theta = cs.cofactors[i];
        const std::size_t m = cs.coset_size(i);
        std::vector<QuadRingElem> gens;
        switch (form.kind) {
            case ComponentKind::Zero:
                return;
            case ComponentKind::OneGenPlain:
                gens.push_back({theta, Poly::zero()});
                break;
            case ComponentKind::OneGenOmega:
                gens.push_back({cyclic_mul(cs.field, theta, form.s, cs.n), theta});
                break;
            case ComponentKind::FullN:
                gens.push_back({theta, Poly::zero()});
                gens.push_back({Poly::zero(), theta});
                break;
        }
        for (const auto& gen : gens)
            for (std::size_t t = 0; t < m; ++t) out.append_row(cs.ring.to_fp_vector(cs.ring.shift(gen, t)));
    }

    static ComponentForm component_join(const ComponentForm& x, const ComponentForm& y) {
        if (x.kind == ComponentKind::FullN || y.kind == ComponentKind::FullN) return ComponentForm::full();
        if (x.kind == ComponentKind::Zero) return y;
        if (y.kind == ComponentKind::Zero) return x;
        if (x == y) return x;
        return ComponentForm::full();  // two distinct K_i-lines span the plane
    }

    // writes r = theta_i (a + omega b) with a, b in K_i
    static std::pair<ExtensionField::Elem, ExtensionField::Elem> decompose_in_component(
        const CosetStructure& cs, const QuadRingElem& r, std::size_t i) {
        const ExtensionField& K = cs.component_fields[i];
        ExtensionField::Elem a = K.mul(cs.theta_inv_mod_f[i], K.from_poly(r.a));
        ExtensionField::Elem b = K.mul(cs.theta_inv_mod_f[i], K.from_poly(r.b));
        return {std::move(a), std::move(b)};
    }

    friend ComponentForm canonicalize_in_Ni(const CosetStructure& cs, const QuadRingElem& r, std::size_t i);

    std::shared_ptr<const CosetStructure> cs_;
    std::vector<ComponentForm> comps_;
    Poly g_, k_, h_;
    FpMat gen_matrix_;
    FpMat rref_;
    std::vector<std::size_t> pivots_;
    std::size_t dim_ = 0;
};

/*
 * Canonical one-generator form of <r> for a nonzero r in N_i: writes
 * r = theta_i (a + omega b); if b = 0 the code is <theta_i>, otherwise
 * <theta_i (omega + s)> with s = a b^{-1} in K_i.
 */
inline ComponentForm canonicalize_in_Ni(const CosetStructure& cs, const QuadRingElem& r, std::size_t i) {
    if (r.is_zero()) throw std::invalid_argument("canonicalize_in_Ni: zero element");
    if (project_component(cs, r, i) != r)
        throw std::invalid_argument("canonicalize_in_Ni: element does not lie in N_i");
    const ExtensionField& K = cs.component_fields[i];
    auto [a, b] = AdditiveCyclicCode::decompose_in_component(cs, r, i);
    if (K.is_zero(b)) {
        if (K.is_zero(a)) throw std::logic_error("canonicalize_in_Ni: nonzero element decomposed to zero");
        return ComponentForm::plain();
    }
    return ComponentForm::omega(K.to_poly(K.mul(a, K.inv(b))));
}

/*
 * All irreducible additive cyclic codes: per coset the code <theta_i> plus
 * the p^{deg f_i} codes <theta_i (omega + s)>, every one a distinct
 * one-generator subcode of N_i.
 */
inline std::vector<AdditiveCyclicCode> enumerate_irreducible(std::shared_ptr<const CosetStructure> cs) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < cs->num_cosets(); ++i) {
        std::uint64_t cnt = 1;
        for (std::size_t t = 0; t < cs->coset_size(i); ++t) cnt *= cs->p;
        total += cnt + 1;
        if (total > 1000000)
            throw std::invalid_argument("enumerate_irreducible: more than 10^6 codes requested");
    }
    std::vector<AdditiveCyclicCode> out;
    out.reserve(static_cast<std::size_t>(total));
    for (std::size_t i = 0; i < cs->num_cosets(); ++i) {
        const ExtensionField& K = cs->component_fields[i];
        std::uint64_t cnt = 1;
        for (std::size_t t = 0; t < cs->coset_size(i); ++t) cnt *= cs->p;
        std::vector<ComponentForm> comps(cs->num_cosets(), ComponentForm::zero());
        comps[i] = ComponentForm::plain();
        out.push_back(AdditiveCyclicCode::from_components(cs, comps));
        for (std::uint64_t idx = 0; idx < cnt; ++idx) {
            comps[i] = ComponentForm::omega(K.to_poly(K.elem_from_index(idx)));
            out.push_back(AdditiveCyclicCode::from_components(cs, comps));
        }
    }
    return out;
}

}  // namespace addcyc
