#pragma once

#include <string>
#include <variant>
#include <vector>

namespace momoa {

enum class InstanceKind { Assignment, Knapsack, ExplicitSet };

/// Multiobjective assignment: p cost matrices over n agents/tasks.
struct AssignmentData {
    int p = 0;
    int n = 0;
    std::vector<std::vector<long long>> costs; // costs[k] row-major, size n*n
};

/// Multiobjective 0-1 knapsack. Profits are stored as given (positive, maximized);
/// the oracles negate them so the whole pipeline minimizes.
struct KnapsackData {
    int p = 0;
    int n = 0;
    long long capacity = 0;
    std::vector<long long> weights;            // positive
    std::vector<std::vector<long long>> profits; // profits[k][j] positive
};

/// Q given directly as a finite list of integer points.
struct ExplicitSetData {
    int p = 0;
    std::vector<std::vector<long long>> points; // nonempty, each of length p
};

/// A problem instance; the feasible objective-space set Q is defined per kind.
class Instance {
public:
    explicit Instance(AssignmentData d);
    explicit Instance(KnapsackData d);
    explicit Instance(ExplicitSetData d);

    InstanceKind kind() const;
    int objectives() const; // p
    int size() const;       // n (point count for explicit sets)

    const AssignmentData& assignment() const;
    const KnapsackData& knapsack() const;
    const ExplicitSetData& explicit_set() const;

private:
    void validate() const;

    std::variant<AssignmentData, KnapsackData, ExplicitSetData> data_;
};

std::string kind_name(InstanceKind k);

} // namespace momoa
