#include "lierine/connection.hpp"

#include "lierine/errors.hpp"

#include <algorithm>

namespace lierine {

Connection::Connection(Algebra algebra, std::size_t rank, std::vector<PolyMatrix> christoffel, std::string label,
                       ConnectionOrigin origin)
    : algebra_(std::move(algebra)),
      rank_(rank),
      christoffel_(std::move(christoffel)),
      label_(std::move(label)),
      origin_(std::move(origin))
{
    if (!algebra_)
        throw StructuralError("connection without an algebra");
    if (rank_ == 0)
        throw StructuralError("connection rank must be positive");
    if (christoffel_.size() != algebra_->rank())
        throw StructuralError("connection needs one Christoffel matrix per basis vector");
    for (const auto& g : christoffel_) {
        if (g.rows() != rank_ || g.cols() != rank_)
            throw StructuralError("Christoffel matrix must be " + std::to_string(rank_) + "x" + std::to_string(rank_));
        if (!same_ring(g.ring(), algebra_->ring()))
            throw StructuralError("Christoffel matrix lives in a different ring");
    }
}

Connection Connection::trivial(Algebra algebra, std::size_t rank, std::string label)
{
    std::vector<PolyMatrix> g(algebra->rank(), PolyMatrix(algebra->ring(), rank, rank));
    return Connection(algebra, rank, std::move(g), std::move(label));
}

Connection Connection::relabeled(std::string label, ConnectionOrigin origin) const
{
    Connection c = *this;
    c.label_ = std::move(label);
    c.origin_ = std::move(origin);
    return c;
}

PolyMatrix Connection::christoffel_of(const GElement& d) const
{
    if (d.coefficients.size() != algebra_->rank())
        throw StructuralError("element length does not match the algebra rank");
    PolyMatrix out(algebra_->ring(), rank_, rank_);
    for (std::size_t j = 0; j < christoffel_.size(); ++j)
        if (!d.coefficients[j].is_zero())
            out += d.coefficients[j] * christoffel_[j];
    return out;
}

int Connection::christoffel_degree() const
{
    int d = -1;
    for (const auto& g : christoffel_)
        for (std::size_t i = 0; i < g.rows(); ++i)
            for (std::size_t j = 0; j < g.cols(); ++j)
                d = std::max(d, g(i, j).degree());
    return d;
}

bool Connection::same_data(const Connection& other) const
{
    return same_algebra(algebra_, other.algebra_) && rank_ == other.rank_ && christoffel_ == other.christoffel_;
}

PolyMatrix apply_connection(const Connection& c, const GElement& d, const PolyMatrix& w)
{
    if (w.rows() != c.rank() || w.cols() != 1)
        throw StructuralError("module element must be a column of length " + std::to_string(c.rank()));
    return Action::on_module(c).apply(d, w);
}

const char* to_string(ValueKind kind)
{
    switch (kind) {
    case ValueKind::Scalar:
        return "scalar";
    case ValueKind::Module:
        return "module";
    case ValueKind::Endo:
        return "endo";
    }
    return "?";
}

Action::Action(ValueKind kind, Algebra algebra, std::size_t rank, std::vector<PolyMatrix> christoffel)
    : kind_(kind), algebra_(std::move(algebra)), rank_(rank), christoffel_(std::move(christoffel))
{
}

Action Action::canonical(Algebra algebra)
{
    return Action(ValueKind::Scalar, std::move(algebra), 1, {});
}

Action Action::on_module(const Connection& c)
{
    return Action(ValueKind::Module, c.algebra(), c.rank(), c.christoffel());
}

Action Action::adjoint(const Connection& c)
{
    return Action(ValueKind::Endo, c.algebra(), c.rank(), c.christoffel());
}

Action ad_connection(const Connection& c)
{
    return Action::adjoint(c);
}

PolyMatrix Action::apply_basis(std::size_t j, const PolyMatrix& value) const
{
    PolyMatrix out = algebra_->anchor(j).apply(value);
    switch (kind_) {
    case ValueKind::Scalar:
        break;
    case ValueKind::Module:
        out += christoffel_[j] * value;
        break;
    case ValueKind::Endo:
        out += christoffel_[j] * value;
        out -= value * christoffel_[j];
        break;
    }
    return out;
}

PolyMatrix Action::apply(const GElement& d, const PolyMatrix& value) const
{
    if (d.coefficients.size() != algebra_->rank())
        throw StructuralError("element length does not match the algebra rank");
    PolyMatrix out(algebra_->ring(), value.rows(), value.cols());
    for (std::size_t j = 0; j < d.coefficients.size(); ++j)
        if (!d.coefficients[j].is_zero())
            out += d.coefficients[j] * apply_basis(j, value);
    return out;
}

int Action::degree_shift() const
{
    int shift = std::max(0, algebra_->anchor_degree() - 1);
    for (const auto& g : christoffel_)
        for (std::size_t i = 0; i < g.rows(); ++i)
            for (std::size_t j = 0; j < g.cols(); ++j)
                shift = std::max(shift, g(i, j).degree());
    return shift;
}

} // namespace lierine
