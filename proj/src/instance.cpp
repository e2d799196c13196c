#include "momoa/instance.hpp"

#include "momoa/errors.hpp"

namespace momoa {

Instance::Instance(AssignmentData d) : data_(std::move(d)) { validate(); }
Instance::Instance(KnapsackData d) : data_(std::move(d)) { validate(); }
Instance::Instance(ExplicitSetData d) : data_(std::move(d)) { validate(); }

InstanceKind Instance::kind() const {
    if (std::holds_alternative<AssignmentData>(data_))
        return InstanceKind::Assignment;
    if (std::holds_alternative<KnapsackData>(data_))
        return InstanceKind::Knapsack;
    return InstanceKind::ExplicitSet;
}

int Instance::objectives() const {
    return std::visit([](const auto& d) { return d.p; }, data_);
}

int Instance::size() const {
    switch (kind()) {
    case InstanceKind::Assignment: return assignment().n;
    case InstanceKind::Knapsack: return knapsack().n;
    case InstanceKind::ExplicitSet: return static_cast<int>(explicit_set().points.size());
    }
    return 0;
}

const AssignmentData& Instance::assignment() const {
    if (kind() != InstanceKind::Assignment)
        throw InternalError("not an assignment instance");
    return std::get<AssignmentData>(data_);
}

const KnapsackData& Instance::knapsack() const {
    if (kind() != InstanceKind::Knapsack)
        throw InternalError("not a knapsack instance");
    return std::get<KnapsackData>(data_);
}

const ExplicitSetData& Instance::explicit_set() const {
    if (kind() != InstanceKind::ExplicitSet)
        throw InternalError("not an explicit-set instance");
    return std::get<ExplicitSetData>(data_);
}

void Instance::validate() const {
    const int p = objectives();
    if (p < 2)
        throw ValidationError("instance needs at least 2 objectives, got " + std::to_string(p));
    switch (kind()) {
    case InstanceKind::Assignment: {
        const auto& a = assignment();
        if (a.n < 1)
            throw ValidationError("assignment size must be positive");
        if (static_cast<int>(a.costs.size()) != p)
            throw ValidationError("expected one cost matrix per objective");
        for (const auto& m : a.costs)
            if (m.size() != static_cast<std::size_t>(a.n) * a.n)
                throw ValidationError("cost matrix is not n x n");
        break;
    }
    case InstanceKind::Knapsack: {
        const auto& k = knapsack();
        if (k.n < 1)
            throw ValidationError("knapsack needs at least one item");
        if (k.weights.size() != static_cast<std::size_t>(k.n))
            throw ValidationError("expected one weight per item");
        for (long long wj : k.weights)
            if (wj <= 0)
                throw ValidationError("item weights must be positive");
        if (static_cast<int>(k.profits.size()) != p)
            throw ValidationError("expected one profit row per objective");
        for (const auto& row : k.profits) {
            if (row.size() != static_cast<std::size_t>(k.n))
                throw ValidationError("profit row is not of length n");
            for (long long pj : row)
                if (pj <= 0)
                    throw ValidationError("profits must be positive");
        }
        break;
    }
    case InstanceKind::ExplicitSet: {
        const auto& e = explicit_set();
        if (e.points.empty())
            throw ValidationError("explicit point set is empty");
        for (const auto& y : e.points)
            if (y.size() != static_cast<std::size_t>(p))
                throw ValidationError("point length differs from p");
        break;
    }
    }
}

std::string kind_name(InstanceKind k) {
    switch (k) {
    case InstanceKind::Assignment: return "map";
    case InstanceKind::Knapsack: return "mkp";
    case InstanceKind::ExplicitSet: return "pts";
    }
    return "?";
}

} // namespace momoa
