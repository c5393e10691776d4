#include "metro/hypernet.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "metro/errors.hpp"

namespace metro {

const char* model_kind_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::Nn: return "nn";
    case ModelKind::Gnn: return "gnn";
    case ModelKind::Hgnn: return "hgnn";
  }
  return "?";
}

namespace {

PropagationKind propagation_for(ModelKind kind) {
  switch (kind) {
    case ModelKind::Nn: return PropagationKind::Identity;
    case ModelKind::Gnn: return PropagationKind::Adjacency;
    case ModelKind::Hgnn: return PropagationKind::Hypergraph;
  }
  return PropagationKind::Identity;
}

struct Moments {
  double mean = 0.0;
  double std = 0.0;
};

Moments column_moments(const std::vector<double>& values) {
  Moments m;
  const double n = static_cast<double>(values.size());
  for (double v : values) m.mean += v;
  m.mean /= n;
  double var = 0.0;
  for (double v : values) var += (v - m.mean) * (v - m.mean);
  m.std = std::sqrt(var / n);
  return m;
}

}  // namespace

FeatureSet build_features(const MetroGraph& g, const FlowTable& flows) {
  const std::size_t n = g.size();
  if (flows.rows.size() != n)
    throw ValidationError("flow table does not cover every station");

  std::vector<double> linear = net_flow(g, flows, FlowDefinition::Linear, Window::Am).q;
  std::vector<double> logq = net_flow(g, flows, FlowDefinition::Log, Window::Am).q;

  std::vector<std::pair<std::string, std::vector<double>>> columns;
  columns.reserve(4);
  std::vector<double> entries(n), exits(n);
  for (std::size_t i = 0; i < n; ++i) {
    entries[i] = flows.rows[i].entries_am;
    exits[i] = flows.rows[i].exits_am;
  }
  columns.emplace_back("entries_am", std::move(entries));
  columns.emplace_back("exits_am", std::move(exits));
  columns.emplace_back("net_linear_am", std::move(linear));
  columns.emplace_back("net_log_am", std::move(logq));

  FeatureSet fs;
  std::vector<std::vector<double>> kept;
  for (auto& [name, values] : columns) {
    Moments m = column_moments(values);
    if (m.std < 1e-12) {
      fs.dropped.push_back(name);
      continue;
    }
    for (double& v : values) v = (v - m.mean) / m.std;
    fs.names.push_back(name);
    fs.means.push_back(m.mean);
    fs.stds.push_back(m.std);
    kept.push_back(std::move(values));
  }
  if (kept.empty())
    throw ValidationError("no informative features: every flow column is constant");

  fs.x = Matrix(n, kept.size());
  for (std::size_t j = 0; j < kept.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) fs.x(i, j) = kept[j][i];
  return fs;
}

Model::Model(const PropagationOperator& prop, std::vector<std::size_t> widths,
             std::size_t in_features, double alpha_init, SplitMix64& rng)
    : propagation_matrix_(prop.matrix) {
  if (widths.empty()) throw std::invalid_argument("Model: at least one layer required");
  std::size_t fan_in = in_features;
  for (std::size_t width : widths) {
    Matrix w(fan_in, width);
    const double bound = 1.0 / std::sqrt(static_cast<double>(fan_in));
    for (std::size_t i = 0; i < fan_in; ++i)
      for (std::size_t j = 0; j < width; ++j) w(i, j) = rng.uniform(-bound, bound);
    weights_.push_back(std::move(w));
    alphas_.push_back(alpha_init);
    fan_in = width;
  }
}

Model Model::from_spec(const ModelSpec& spec, const PropagationOperator& prop,
                       std::size_t in_features) {
  std::vector<std::size_t> widths;
  if (spec.depth == ModelDepth::Double)
    widths = {static_cast<std::size_t>(spec.hidden_width), 1};
  else
    widths = {1};
  SplitMix64 rng(spec.seed);
  return Model(prop, widths, in_features, spec.alpha_init, rng);
}

Matrix Model::forward(const Matrix& x) const {
  Matrix h = x;
  for (std::size_t l = 0; l < weights_.size(); ++l) {
    Matrix filtered = matmul(propagation_matrix_, h).scaled(alphas_[l]);
    filtered += h;  // (I + alpha P) H
    Matrix z = matmul(filtered, weights_[l]);
    if (l + 1 < weights_.size()) {
      for (std::size_t i = 0; i < z.rows(); ++i)
        for (std::size_t j = 0; j < z.cols(); ++j) z(i, j) = std::tanh(z(i, j));
    }
    h = std::move(z);
  }
  return h;
}

std::vector<double> Model::predict(const Matrix& x) const {
  Matrix out = forward(x);
  if (out.cols() != 1)
    throw std::logic_error("predict requires an output width of 1");
  std::vector<double> y(out.rows());
  for (std::size_t i = 0; i < out.rows(); ++i) y[i] = out(i, 0);
  return y;
}

double Model::loss(const Matrix& x, const std::vector<double>& y,
                   const std::vector<int>& subset) const {
  if (subset.empty()) throw ValidationError("loss over an empty station set");
  Matrix out = forward(x);
  double acc = 0.0;
  for (int i : subset) {
    double diff = out(i, 0) - y[i];
    acc += diff * diff;
  }
  return acc / static_cast<double>(subset.size());
}

Model::Gradients Model::gradients(const Matrix& x, const std::vector<double>& y,
                                  const std::vector<int>& train_idx) const {
  if (train_idx.empty()) throw ValidationError("training requires a non-empty train set");
  const std::size_t layers = weights_.size();
  const Matrix& p = propagation_matrix_;

  // Forward pass with caches.
  std::vector<Matrix> inputs(layers);      // H fed into each layer
  std::vector<Matrix> propagated(layers);  // P * H
  std::vector<Matrix> filtered(layers);    // (I + alpha P) H
  std::vector<Matrix> outputs(layers);     // activation output
  Matrix h = x;
  for (std::size_t l = 0; l < layers; ++l) {
    inputs[l] = h;
    propagated[l] = matmul(p, h);
    filtered[l] = propagated[l].scaled(alphas_[l]);
    filtered[l] += h;
    Matrix z = matmul(filtered[l], weights_[l]);
    if (l + 1 < layers) {
      for (std::size_t i = 0; i < z.rows(); ++i)
        for (std::size_t j = 0; j < z.cols(); ++j) z(i, j) = std::tanh(z(i, j));
    }
    outputs[l] = z;
    h = z;
  }

  Gradients grad;
  grad.weights.resize(layers);
  grad.alphas.assign(layers, 0.0);

  const Matrix& out = outputs[layers - 1];
  const double inv_count = 1.0 / static_cast<double>(train_idx.size());
  double loss = 0.0;
  Matrix g(out.rows(), 1);
  for (int i : train_idx) {
    double diff = out(i, 0) - y[i];
    loss += diff * diff;
    g(i, 0) = 2.0 * diff * inv_count;
  }
  grad.loss = loss * inv_count;

  // Backward pass. g holds dL/dZ of the current layer.
  for (std::size_t l = layers; l-- > 0;) {
    grad.weights[l] = matmul(filtered[l].transposed(), g);

    Matrix pw = matmul(propagated[l], weights_[l]);
    double da = 0.0;
    for (std::size_t i = 0; i < pw.rows(); ++i)
      for (std::size_t j = 0; j < pw.cols(); ++j) da += pw(i, j) * g(i, j);
    grad.alphas[l] = da;

    if (l == 0) break;
    Matrix dzin = matmul(g, weights_[l].transposed());
    Matrix dh = matmul(p.transposed(), dzin).scaled(alphas_[l]);
    dh += dzin;  // (I + alpha P)^T dZin
    // Through the tanh of the previous layer.
    const Matrix& prev_out = outputs[l - 1];
    for (std::size_t i = 0; i < dh.rows(); ++i)
      for (std::size_t j = 0; j < dh.cols(); ++j)
        dh(i, j) *= 1.0 - prev_out(i, j) * prev_out(i, j);
    g = std::move(dh);
  }
  return grad;
}

void Model::step(const Gradients& grad, double lr) {
  for (std::size_t l = 0; l < weights_.size(); ++l) {
    Matrix& w = weights_[l];
    const Matrix& dw = grad.weights[l];
    for (std::size_t i = 0; i < w.rows(); ++i)
      for (std::size_t j = 0; j < w.cols(); ++j) w(i, j) -= lr * dw(i, j);
    alphas_[l] -= lr * grad.alphas[l];
  }
}

TrainReport train_model(Model& model, const Matrix& x, const std::vector<double>& y,
                        const std::vector<int>& train_idx, const std::vector<int>& test_idx,
                        const TrainOptions& options) {
  if (train_idx.empty()) throw ValidationError("training requires a non-empty train set");
  if (options.epochs < 0) throw std::invalid_argument("negative epoch count");
  if (y.size() != x.rows()) throw std::invalid_argument("target length mismatch");

  TrainReport report;
  report.epochs = options.epochs;
  report.learning_rate = options.lr;
  report.loss_history.reserve(options.epochs);

  for (int epoch = 0; epoch < options.epochs; ++epoch) {
    Model::Gradients grad = model.gradients(x, y, train_idx);
    if (!std::isfinite(grad.loss))
      throw NumericalError("training diverged (non-finite loss); try a smaller learning rate");
    report.loss_history.push_back(grad.loss);
    model.step(grad, options.lr);
  }

  report.train_mse = model.loss(x, y, train_idx);
  if (!std::isfinite(report.train_mse))
    throw NumericalError("training diverged (non-finite loss); try a smaller learning rate");
  if (!test_idx.empty()) report.test_mse = model.loss(x, y, test_idx);
  report.predictions = model.predict(x);
  report.alphas = model.alphas();
  return report;
}

TrainReport train(const ModelSpec& spec, const Matrix& x, const std::vector<double>& y,
                  const PropagationOperator& prop, const std::vector<int>& train_idx,
                  const std::vector<int>& test_idx, const TrainOptions& options) {
  Model model = Model::from_spec(spec, prop, x.cols());
  return train_model(model, x, y, train_idx, test_idx, options);
}

TrainReport run_experiment(const MetroGraph& g, const FlowTable& flows, const ModelSpec& spec,
                           double train_frac, const TrainOptions& options) {
  if (!(train_frac > 0.0) || train_frac > 1.0)
    throw ValidationError("train fraction must lie in (0, 1]");
  const std::size_t n = g.size();

  FeatureSet features = build_features(g, flows);
  PropagationOperator prop = make_propagation(g, propagation_for(spec.kind));

  // One generator drives the split and then the weight init.
  SplitMix64 rng(spec.seed);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  const std::size_t n_train =
      static_cast<std::size_t>(std::llround(train_frac * static_cast<double>(n)));
  if (n_train == 0) throw ValidationError("train fraction selects no stations");
  std::vector<int> train_idx(order.begin(), order.begin() + n_train);
  std::vector<int> test_idx(order.begin() + n_train, order.end());
  std::sort(train_idx.begin(), train_idx.end());
  std::sort(test_idx.begin(), test_idx.end());

  // Evening linear net out-flow, z-scored on the training stations only.
  std::vector<double> target = net_flow(g, flows, FlowDefinition::Linear, Window::Pm).q;
  double mean = 0.0;
  for (int i : train_idx) mean += target[i];
  mean /= static_cast<double>(train_idx.size());
  double var = 0.0;
  for (int i : train_idx) var += (target[i] - mean) * (target[i] - mean);
  double std_dev = std::sqrt(var / static_cast<double>(train_idx.size()));
  if (std_dev < 1e-12)
    throw ValidationError("training target is constant; nothing to regress");
  for (double& v : target) v = (v - mean) / std_dev;

  std::vector<std::size_t> widths;
  if (spec.depth == ModelDepth::Double)
    widths = {static_cast<std::size_t>(spec.hidden_width), 1};
  else
    widths = {1};
  Model model(prop, widths, features.x.cols(), spec.alpha_init, rng);

  TrainReport report = train_model(model, features.x, target, train_idx, test_idx, options);
  report.target_mean = mean;
  report.target_std = std_dev;
  report.feature_names = features.names;
  report.feature_means = features.means;
  report.feature_stds = features.stds;
  report.dropped_features = features.dropped;
  for (int i : train_idx) report.train_ids.push_back(g.station(i).id);
  for (int i : test_idx) report.test_ids.push_back(g.station(i).id);
  std::sort(report.train_ids.begin(), report.train_ids.end());
  std::sort(report.test_ids.begin(), report.test_ids.end());
  return report;
}

}  // namespace metro
