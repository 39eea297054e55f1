#include "lierine/forms.hpp"

#include "lierine/errors.hpp"

#include <string>

namespace lierine {

Form::Form(Algebra algebra, unsigned degree, ValueKind kind, std::size_t rank)
    : algebra_(std::move(algebra)), degree_(degree), kind_(kind), rank_(kind == ValueKind::Scalar ? 1 : rank)
{
    if (!algebra_)
        throw StructuralError("form without an algebra");
    if (rank_ == 0)
        throw StructuralError("form rank must be positive");
    auto count = binomial(static_cast<unsigned>(algebra_->rank()), degree_);
    values_.assign(count, PolyMatrix(algebra_->ring(), value_rows(), value_cols()));
}

Form Form::constant(Algebra algebra, ValueKind kind, const PolyMatrix& value)
{
    Form f(std::move(algebra), 0, kind, kind == ValueKind::Scalar ? 1 : value.rows());
    if (value.rows() != f.value_rows() || value.cols() != f.value_cols())
        throw StructuralError("constant form value has the wrong shape");
    f.values_[0] = value;
    return f;
}

Form Form::identity(Algebra algebra, std::size_t rank)
{
    auto ring = algebra->ring();
    return constant(std::move(algebra), ValueKind::Endo, PolyMatrix::identity(ring, rank));
}

Form Form::dual(Algebra algebra, std::size_t i, const Polynomial& value)
{
    Form f(std::move(algebra), 1, ValueKind::Scalar);
    f.values_.at(i) = PolyMatrix::scalar(value);
    return f;
}

std::vector<Subset> Form::basis_subsets() const
{
    return subsets(static_cast<unsigned>(algebra_->rank()), degree_);
}

const PolyMatrix& Form::at(const Subset& s) const
{
    if (s.size() != degree_)
        throw StructuralError("subset size does not match the form degree");
    return values_.at(subset_rank(s, static_cast<unsigned>(algebra_->rank())));
}

void Form::set(const Subset& s, PolyMatrix v)
{
    if (s.size() != degree_)
        throw StructuralError("subset size does not match the form degree");
    if (v.rows() != value_rows() || v.cols() != value_cols())
        throw StructuralError("form value has the wrong shape");
    values_.at(subset_rank(s, static_cast<unsigned>(algebra_->rank()))) = std::move(v);
}

namespace {

/// Cofactor expansion along the first row.
Polynomial determinant(const std::vector<std::vector<Polynomial>>& m, const Ring& ring)
{
    const std::size_t n = m.size();
    if (n == 0)
        return Polynomial::constant(ring, 1);
    if (n == 1)
        return m[0][0];
    Polynomial det(ring);
    for (std::size_t col = 0; col < n; ++col) {
        if (m[0][col].is_zero())
            continue;
        std::vector<std::vector<Polynomial>> minor;
        minor.reserve(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Polynomial> row;
            row.reserve(n - 1);
            for (std::size_t c = 0; c < n; ++c)
                if (c != col)
                    row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Polynomial term = m[0][col] * determinant(minor, ring);
        if (col % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

} // namespace

PolyMatrix Form::evaluate(std::span<const GElement> args) const
{
    if (args.size() != degree_)
        throw StructuralError("form of degree " + std::to_string(degree_) + " evaluated on " +
                              std::to_string(args.size()) + " arguments");
    const Ring& ring = algebra_->ring();
    PolyMatrix out(ring, value_rows(), value_cols());
    auto subs = basis_subsets();
    for (std::size_t k = 0; k < subs.size(); ++k) {
        if (values_[k].is_zero())
            continue;
        std::vector<std::vector<Polynomial>> m;
        m.reserve(degree_);
        for (const auto& a : args) {
            if (a.coefficients.size() != algebra_->rank())
                throw StructuralError("argument length does not match the algebra rank");
            std::vector<Polynomial> row;
            row.reserve(degree_);
            for (unsigned s : subs[k])
                row.push_back(a.coefficients[s]);
            m.push_back(std::move(row));
        }
        Polynomial det = determinant(m, ring);
        if (!det.is_zero())
            out += det * values_[k];
    }
    return out;
}

bool Form::is_zero() const
{
    for (const auto& v : values_)
        if (!v.is_zero())
            return false;
    return true;
}

void Form::check_compatible(const Form& other, const char* op) const
{
    if (!same_algebra(algebra_, other.algebra_))
        throw StructuralError(std::string("algebra mismatch in form ") + op);
    if (degree_ != other.degree_ || kind_ != other.kind_ || rank_ != other.rank_)
        throw StructuralError(std::string("degree/kind/rank mismatch in form ") + op);
}

Form& Form::operator+=(const Form& other)
{
    check_compatible(other, "addition");
    for (std::size_t k = 0; k < values_.size(); ++k)
        values_[k] += other.values_[k];
    return *this;
}

Form& Form::operator-=(const Form& other)
{
    check_compatible(other, "subtraction");
    for (std::size_t k = 0; k < values_.size(); ++k)
        values_[k] -= other.values_[k];
    return *this;
}

Form operator*(const Rational& c, Form f)
{
    for (auto& v : f.values_)
        v = c * v;
    return f;
}

Form operator*(const Polynomial& c, Form f)
{
    for (auto& v : f.values_)
        v = c * v;
    return f;
}

Form Form::operator-() const
{
    Form f = *this;
    for (auto& v : f.values_)
        v = -v;
    return f;
}

bool Form::operator==(const Form& other) const
{
    return same_algebra(algebra_, other.algebra_) && degree_ == other.degree_ && kind_ == other.kind_ &&
           rank_ == other.rank_ && values_ == other.values_;
}

namespace {

struct ProductShape {
    ValueKind kind;
    std::size_t rank;
};

ProductShape product_shape(const Form& a, const Form& b)
{
    using K = ValueKind;
    if (a.kind() == K::Scalar)
        return {b.kind(), b.rank()};
    if (b.kind() == K::Scalar)
        return {a.kind(), a.rank()};
    if (a.kind() == K::Endo && (b.kind() == K::Endo || b.kind() == K::Module)) {
        if (a.rank() != b.rank())
            throw StructuralError("wedge of endomorphism forms with different ranks");
        return {b.kind(), b.rank()};
    }
    throw StructuralError(std::string("cannot wedge ") + to_string(a.kind()) + " with " + to_string(b.kind()) +
                          " forms");
}

PolyMatrix value_product(const PolyMatrix& x, ValueKind kx, const PolyMatrix& y, ValueKind ky)
{
    if (kx == ValueKind::Scalar)
        return x(0, 0) * y;
    if (ky == ValueKind::Scalar)
        return y(0, 0) * x;
    return x * y;
}

} // namespace

Form wedge(const Form& phi, const Form& psi)
{
    if (!same_algebra(phi.algebra(), psi.algebra()))
        throw StructuralError("algebra mismatch in wedge");
    ProductShape shape = product_shape(phi, psi);
    const unsigned p = phi.degree();
    const unsigned q = psi.degree();
    const unsigned m = static_cast<unsigned>(phi.algebra()->rank());
    Form out(phi.algebra(), p + q, shape.kind, shape.rank);
    if (p + q > m)
        return out;
    auto targets = out.basis_subsets();
    auto positions = subsets(p + q, p);
    for (std::size_t t = 0; t < targets.size(); ++t) {
        const Subset& s = targets[t];
        PolyMatrix acc(out.algebra()->ring(), out.value_rows(), out.value_cols());
        for (const auto& pos : positions) {
            Subset left, right;
            left.reserve(p);
            right.reserve(q);
            std::size_t next = 0;
            unsigned inversions = 0;
            for (unsigned k = 0; k < p + q; ++k) {
                if (next < pos.size() && pos[next] == k) {
                    left.push_back(s[k]);
                    inversions += k - static_cast<unsigned>(next);
                    ++next;
                } else {
                    right.push_back(s[k]);
                }
            }
            const PolyMatrix& a = phi.at(left);
            const PolyMatrix& b = psi.at(right);
            if (a.is_zero() || b.is_zero())
                continue;
            PolyMatrix prod = value_product(a, phi.kind(), b, psi.kind());
            if (inversions % 2 == 0)
                acc += prod;
            else
                acc -= prod;
        }
        out.value(t) = std::move(acc);
    }
    return out;
}

namespace {

void check_action(const Form& phi, const Action& action)
{
    if (!same_algebra(phi.algebra(), action.algebra()))
        throw StructuralError("differential: action and form live over different algebras");
    if (phi.kind() != action.kind())
        throw StructuralError(std::string("differential: ") + to_string(phi.kind()) + " form with " +
                              to_string(action.kind()) + " action");
    if (phi.kind() != ValueKind::Scalar && phi.rank() != action.rank())
        throw StructuralError("differential: form rank does not match the connection rank");
}

} // namespace

Form differential(const Form& phi, const Action& action)
{
    check_action(phi, action);
    const LieRinehartData& alg = *phi.algebra();
    const unsigned p = phi.degree();
    Form out(phi.algebra(), p + 1, phi.kind(), phi.rank());
    auto targets = out.basis_subsets();
    for (std::size_t t = 0; t < targets.size(); ++t) {
        const Subset& s = targets[t];
        PolyMatrix acc(alg.ring(), out.value_rows(), out.value_cols());
        // sum_i (-1)^{i+1} ∇_{δ_i} φ(δ_1 .. ^δ_i .. δ_{p+1})   (1-based i)
        for (unsigned i = 0; i <= p; ++i) {
            Subset rest;
            rest.reserve(p);
            for (unsigned k = 0; k <= p; ++k)
                if (k != i)
                    rest.push_back(s[k]);
            const PolyMatrix& v = phi.at(rest);
            if (v.is_zero())
                continue;
            PolyMatrix term = action.apply_basis(s[i], v);
            if (i % 2 == 0)
                acc += term;
            else
                acc -= term;
        }
        // sum_{i<j} (-1)^{i+j} φ([δ_i, δ_j] ∧ δ_1 .. ^δ_i .. ^δ_j .. δ_{p+1})
        for (unsigned i = 0; i <= p; ++i)
            for (unsigned j = i + 1; j <= p; ++j) {
                const auto* c = alg.bracket_coefficients(s[i], s[j]);
                if (!c)
                    continue;
                for (unsigned k = 0; k < alg.rank(); ++k) {
                    if ((*c)[k].is_zero())
                        continue;
                    std::vector<unsigned> idx;
                    idx.reserve(p);
                    idx.push_back(k);
                    for (unsigned l = 0; l <= p; ++l)
                        if (l != i && l != j)
                            idx.push_back(s[l]);
                    int sign = sort_with_sign(idx);
                    if (sign == 0)
                        continue;
                    const PolyMatrix& v = phi.at(idx);
                    if (v.is_zero())
                        continue;
                    PolyMatrix term = (*c)[k] * v;
                    if ((i + j) % 2 == 1)
                        sign = -sign;
                    if (sign > 0)
                        acc += term;
                    else
                        acc -= term;
                }
            }
        out.value(t) = std::move(acc);
    }
    return out;
}

Form differential(const Form& phi)
{
    return differential(phi, Action::canonical(phi.algebra()));
}

PolyMatrix differential_eval_raw(const Form& phi, const Action& action, std::span<const GElement> args)
{
    check_action(phi, action);
    const unsigned p = phi.degree();
    if (args.size() != p + 1)
        throw StructuralError("differential_eval_raw needs degree + 1 arguments");
    const LieRinehartData& alg = *phi.algebra();
    PolyMatrix acc(alg.ring(), phi.value_rows(), phi.value_cols());
    for (unsigned i = 0; i <= p; ++i) {
        std::vector<GElement> rest;
        for (unsigned k = 0; k <= p; ++k)
            if (k != i)
                rest.push_back(args[k]);
        PolyMatrix term = action.apply(args[i], phi.evaluate(rest));
        if (i % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    for (unsigned i = 0; i <= p; ++i)
        for (unsigned j = i + 1; j <= p; ++j) {
            std::vector<GElement> inner;
            inner.push_back(bracket_general(alg, args[i], args[j]));
            for (unsigned k = 0; k <= p; ++k)
                if (k != i && k != j)
                    inner.push_back(args[k]);
            PolyMatrix term = phi.evaluate(inner);
            if ((i + j) % 2 == 0)
                acc += term;
            else
                acc -= term;
        }
    return acc;
}

Form trace_form(const Form& phi)
{
    if (phi.kind() != ValueKind::Endo)
        throw StructuralError("trace of a non-endomorphism form");
    Form out(phi.algebra(), phi.degree(), ValueKind::Scalar);
    for (std::size_t k = 0; k < phi.size(); ++k)
        out.value(k) = PolyMatrix::scalar(phi.value(k).trace());
    return out;
}

Form endo_direct_sum(const Form& phi, const Form& psi)
{
    if (phi.kind() != ValueKind::Endo || psi.kind() != ValueKind::Endo)
        throw StructuralError("direct sum of non-endomorphism forms");
    if (!same_algebra(phi.algebra(), psi.algebra()) || phi.degree() != psi.degree())
        throw StructuralError("direct sum of forms of different degree or algebra");
    Form out(phi.algebra(), phi.degree(), ValueKind::Endo, phi.rank() + psi.rank());
    for (std::size_t k = 0; k < phi.size(); ++k)
        out.value(k) = block_diagonal(phi.value(k), psi.value(k));
    return out;
}

Form endo_tensor_identity(const Form& phi, std::size_t other_rank)
{
    if (phi.kind() != ValueKind::Endo)
        throw StructuralError("tensor of a non-endomorphism form");
    Form out(phi.algebra(), phi.degree(), ValueKind::Endo, phi.rank() * other_rank);
    auto id = PolyMatrix::identity(phi.algebra()->ring(), other_rank);
    for (std::size_t k = 0; k < phi.size(); ++k)
        out.value(k) = kron(phi.value(k), id);
    return out;
}

Form identity_tensor_endo(std::size_t other_rank, const Form& psi)
{
    if (psi.kind() != ValueKind::Endo)
        throw StructuralError("tensor of a non-endomorphism form");
    Form out(psi.algebra(), psi.degree(), ValueKind::Endo, psi.rank() * other_rank);
    auto id = PolyMatrix::identity(psi.algebra()->ring(), other_rank);
    for (std::size_t k = 0; k < psi.size(); ++k)
        out.value(k) = kron(id, psi.value(k));
    return out;
}

} // namespace lierine
