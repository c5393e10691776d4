#ifndef METRO_HYPERNET_HPP
#define METRO_HYPERNET_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "metro/diffusion.hpp"
#include "metro/graph.hpp"
#include "metro/hypergraph.hpp"
#include "metro/matrix.hpp"
#include "metro/rng.hpp"

namespace metro {

enum class ModelKind { Nn, Gnn, Hgnn };
enum class ModelDepth { Single, Double };

const char* model_kind_name(ModelKind kind);

// Forecasting model configuration. All three kinds share the layer form
//
//   H_out = sigma((I + alpha * P) * H_in * W)
//
// with P the identity (nn), the adjacency matrix (gnn) or the hypergraph
// matrix Theta (hgnn). alpha is a learnable scalar per layer, initialized
// to 0.5. The default stack is F -> hidden_width (tanh) -> 1 (identity);
// ModelDepth::Single keeps the literal one-layer filter F -> 1.
struct ModelSpec {
  ModelKind kind = ModelKind::Hgnn;
  ModelDepth depth = ModelDepth::Double;
  int hidden_width = 8;
  double alpha_init = 0.5;
  std::uint64_t seed = 42;
};

// Morning-window station features, z-scored over stations: entries, exits,
// linear net out-flow and log net out-flow. Constant columns are dropped
// and recorded; if nothing informative remains a ValidationError is raised.
struct FeatureSet {
  Matrix x;  // N x F, each kept column has mean 0 and variance 1
  std::vector<std::string> names;
  std::vector<double> means;
  std::vector<double> stds;
  std::vector<std::string> dropped;
};

FeatureSet build_features(const MetroGraph& g, const FlowTable& flows);

// Parameters of the layered filter plus forward and gradient evaluation.
// Weight entries are drawn uniformly from [-1/sqrt(fan_in), 1/sqrt(fan_in)]
// in layer order, row-major, off the supplied generator.
class Model {
 public:
  Model(const PropagationOperator& prop, std::vector<std::size_t> widths,
        std::size_t in_features, double alpha_init, SplitMix64& rng);

  static Model from_spec(const ModelSpec& spec, const PropagationOperator& prop,
                         std::size_t in_features);

  Matrix forward(const Matrix& x) const;
  std::vector<double> predict(const Matrix& x) const;

  // Mean squared error over the listed stations only.
  double loss(const Matrix& x, const std::vector<double>& y,
              const std::vector<int>& subset) const;

  struct Gradients {
    double loss = 0.0;
    std::vector<Matrix> weights;
    std::vector<double> alphas;
  };
  Gradients gradients(const Matrix& x, const std::vector<double>& y,
                      const std::vector<int>& train_idx) const;
  void step(const Gradients& grad, double lr);

  std::size_t layer_count() const { return weights_.size(); }
  std::vector<Matrix>& weights() { return weights_; }
  const std::vector<Matrix>& weights() const { return weights_; }
  std::vector<double>& alphas() { return alphas_; }
  const std::vector<double>& alphas() const { return alphas_; }

 private:
  Matrix propagation_matrix_;
  std::vector<Matrix> weights_;
  std::vector<double> alphas_;
};

struct TrainOptions {
  int epochs = 500;
  double lr = 0.01;
};

struct TrainReport {
  double train_mse = 0.0;
  std::optional<double> test_mse;  // absent when the test set is empty
  int epochs = 0;
  double learning_rate = 0.0;
  std::vector<std::string> train_ids, test_ids;
  std::vector<double> predictions;  // per station, normalized target units
  double target_mean = 0.0, target_std = 1.0;
  std::vector<std::string> feature_names;
  std::vector<double> feature_means, feature_stds;
  std::vector<std::string> dropped_features;
  std::vector<double> alphas;        // learned filter coefficients
  std::vector<double> loss_history;  // training loss before each step
};

// Full-batch gradient descent on the training stations. Propagation always
// uses the whole graph, so held-out stations still shape the filtered
// features (semi-supervised). Throws ValidationError on an empty train set
// and NumericalError if the loss turns non-finite.
TrainReport train_model(Model& model, const Matrix& x, const std::vector<double>& y,
                        const std::vector<int>& train_idx, const std::vector<int>& test_idx,
                        const TrainOptions& options);

// Convenience wrapper that builds the model from a spec first. y must
// already be normalized (z-scored on the training stations).
TrainReport train(const ModelSpec& spec, const Matrix& x, const std::vector<double>& y,
                  const PropagationOperator& prop, const std::vector<int>& train_idx,
                  const std::vector<int>& test_idx, const TrainOptions& options);

// End-to-end experiment: morning features predict the evening linear net
// out-flow. The split is a seeded shuffle (train_frac of the stations
// train, the rest test), the target is z-scored on the training stations
// only, and the whole run is deterministic given the seed.
TrainReport run_experiment(const MetroGraph& g, const FlowTable& flows, const ModelSpec& spec,
                           double train_frac, const TrainOptions& options = {});

}  // namespace metro

#endif
