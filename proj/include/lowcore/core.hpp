#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lowcore {

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Row-major storage: point i occupies coords[i*dim, (i+1)*dim).
class WeightedPointSet {
public:
    WeightedPointSet() = default;
    explicit WeightedPointSet(std::size_t dim);
    WeightedPointSet(std::size_t dim, std::vector<double> coords, std::vector<double> weights);

    static WeightedPointSet from_1d(const std::vector<double>& xs);
    static WeightedPointSet from_1d(const std::vector<double>& xs, const std::vector<double>& ws);

    void add(std::span<const double> p, double w = 1.0);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return weights_.size(); }
    bool empty() const { return weights_.empty(); }

    std::span<const double> point(std::size_t i) const { return {coords_.data() + i * dim_, dim_}; }
    double weight(std::size_t i) const { return weights_[i]; }
    const std::vector<double>& coords() const { return coords_; }
    const std::vector<double>& weights() const { return weights_; }

    double total_weight() const;

private:
    std::size_t dim_ = 1;
    std::vector<double> coords_;
    std::vector<double> weights_;
};

class CenterSet {
public:
    CenterSet() = default;
    explicit CenterSet(std::size_t dim) : dim_(dim) {}
    CenterSet(std::size_t dim, std::vector<double> coords);

    static CenterSet from_1d(const std::vector<double>& cs);

    void add(std::span<const double> c);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return dim_ ? coords_.size() / dim_ : 0; }
    bool empty() const { return coords_.empty(); }
    std::span<const double> center(std::size_t i) const { return {coords_.data() + i * dim_, dim_}; }
    const std::vector<double>& coords() const { return coords_; }

private:
    std::size_t dim_ = 1;
    std::vector<double> coords_;
};

struct CostParams {
    double z = 1.0;
};

// Neumaier variant of Kahan summation.
class CompensatedSum {
public:
    void add(double x);
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

double sq_dist(std::span<const double> a, std::span<const double> b);
double dist_pow(double sq, double z);

double cost(const WeightedPointSet& P, const CenterSet& C, CostParams params = {});
std::vector<std::size_t> assign(const WeightedPointSet& P, const CenterSet& C);

inline constexpr double kInfiniteError = std::numeric_limits<double>::infinity();
double relative_error(double costP, double costS);

WeightedPointSet read_points_csv(const std::string& path);
void write_points_csv(const std::string& path, const WeightedPointSet& P);
WeightedPointSet parse_points_csv(const std::string& text);
std::string format_points_csv(const WeightedPointSet& P);

}  // namespace lowcore
