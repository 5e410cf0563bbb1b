#include "shepherd/ddpg/checkpoint.hpp"

#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <sstream>

#include "shepherd/errors.hpp"

namespace shepherd::ddpg {

static_assert(std::endian::native == std::endian::little, "checkpoint I/O assumes little-endian");

namespace {

constexpr std::array<char, 8> kMagic{'S', 'H', 'E', 'P', 'D', 'D', 'P', 'G'};

class Writer {
 public:
  explicit Writer(std::ostream& out) : out_(out) {}
  template <typename T>
  void put(T v) {
    out_.write(reinterpret_cast<const char*>(&v), sizeof(T));
  }
  void doubles(std::span<const double> v) {
    put<std::uint64_t>(v.size());
    out_.write(reinterpret_cast<const char*>(v.data()), static_cast<std::streamsize>(v.size() * sizeof(double)));
  }
  void text(const std::string& s) {
    put<std::uint64_t>(s.size());
    out_.write(s.data(), static_cast<std::streamsize>(s.size()));
  }

 private:
  std::ostream& out_;
};

class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}
  template <typename T>
  T get() {
    T v{};
    in_.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!in_) throw DimensionError("checkpoint: truncated stream");
    return v;
  }
  void doubles_into(std::span<double> dst) {
    const auto n = get<std::uint64_t>();
    if (n != dst.size())
      throw DimensionError("checkpoint: expected " + std::to_string(dst.size()) +
                           " values, found " + std::to_string(n));
    in_.read(reinterpret_cast<char*>(dst.data()), static_cast<std::streamsize>(n * sizeof(double)));
    if (!in_) throw DimensionError("checkpoint: truncated stream");
  }
  std::string text() {
    const auto n = get<std::uint64_t>();
    if (n > (1u << 20)) throw DimensionError("checkpoint: implausible text length");
    std::string s(n, '\0');
    in_.read(s.data(), static_cast<std::streamsize>(n));
    if (!in_) throw DimensionError("checkpoint: truncated stream");
    return s;
  }

 private:
  std::istream& in_;
};

void write_mlp(Writer& w, const Mlp& net) {
  w.put<std::uint32_t>(static_cast<std::uint32_t>(net.layer_sizes().size()));
  for (int s : net.layer_sizes()) w.put<std::int32_t>(s);
  w.put<std::uint8_t>(static_cast<std::uint8_t>(net.hidden_activation()));
  w.put<std::uint8_t>(static_cast<std::uint8_t>(net.output_activation()));
  w.doubles(net.parameters());
}

void read_mlp(Reader& r, Mlp& net, const char* name) {
  const auto n = r.get<std::uint32_t>();
  if (n > 64) throw DimensionError(std::string("checkpoint: bad layer count for ") + name);
  std::vector<int> sizes(n);
  for (auto& s : sizes) s = r.get<std::int32_t>();
  const auto hidden = static_cast<Activation>(r.get<std::uint8_t>());
  const auto output = static_cast<Activation>(r.get<std::uint8_t>());
  if (sizes != net.layer_sizes() || hidden != net.hidden_activation() ||
      output != net.output_activation())
    throw DimensionError(std::string("checkpoint: ") + name + " shape disagrees with its config");
  r.doubles_into(net.parameters());
}

void write_adam(Writer& w, const AdamState& a) {
  w.put(a.learning_rate);
  w.put(a.beta1);
  w.put(a.beta2);
  w.put(a.epsilon);
  w.put<std::int64_t>(a.step_count);
  w.doubles(a.first_moment);
  w.doubles(a.second_moment);
}

void read_adam(Reader& r, AdamState& a) {
  a.learning_rate = r.get<double>();
  a.beta1 = r.get<double>();
  a.beta2 = r.get<double>();
  a.epsilon = r.get<double>();
  a.step_count = r.get<std::int64_t>();
  r.doubles_into(a.first_moment);
  r.doubles_into(a.second_moment);
}

}  // namespace

void save_checkpoint(const DdpgAgent& agent, std::ostream& out) {
  Writer w(out);
  out.write(kMagic.data(), kMagic.size());
  w.put<std::uint32_t>(kCheckpointVersion);

  const AgentConfig& c = agent.config();
  w.put<std::int32_t>(c.state_dim);
  w.put<std::int32_t>(c.action_dim);
  w.put<std::uint32_t>(static_cast<std::uint32_t>(c.actor_hidden.size()));
  for (int h : c.actor_hidden) w.put<std::int32_t>(h);
  w.put<std::int32_t>(c.critic_branch);
  w.put<std::int32_t>(c.critic_hidden);
  w.put(c.gamma);
  w.put(c.tau_soft);
  w.put(c.actor_lr);
  w.put(c.critic_lr);
  w.put<std::int32_t>(c.minibatch);
  w.put<std::uint64_t>(c.replay_capacity);
  w.put(c.noise.sigma0);
  w.put(c.noise.decay);
  w.put(c.noise.floor);

  w.put<std::uint64_t>(agent.seed());
  w.put<std::int64_t>(agent.episodes_done());

  write_mlp(w, agent.actor());
  for (const Mlp* p : agent.critic().parts()) write_mlp(w, *p);
  write_mlp(w, agent.target_actor());
  for (const Mlp* p : agent.target_critic().parts()) write_mlp(w, *p);

  write_adam(w, agent.actor_opt());
  for (const auto& a : agent.critic_opt()) write_adam(w, a);

  std::ostringstream rng_text;
  rng_text << agent.rng();
  w.text(rng_text.str());
}

void save_checkpoint(const DdpgAgent& agent, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileError(path, "cannot open checkpoint for writing");
  save_checkpoint(agent, out);
  out.flush();
  if (!out) throw FileError(path, "write failed");
}

DdpgAgent load_checkpoint(std::istream& in) {
  std::array<char, 8> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic) throw DimensionError("checkpoint: bad magic string");
  Reader r(in);
  const auto version = r.get<std::uint32_t>();
  if (version != kCheckpointVersion)
    throw DimensionError("checkpoint: unsupported format version " + std::to_string(version));

  AgentConfig c;
  c.state_dim = r.get<std::int32_t>();
  c.action_dim = r.get<std::int32_t>();
  const auto n_hidden = r.get<std::uint32_t>();
  if (n_hidden > 64) throw DimensionError("checkpoint: bad hidden layer count");
  c.actor_hidden.resize(n_hidden);
  for (auto& h : c.actor_hidden) h = r.get<std::int32_t>();
  c.critic_branch = r.get<std::int32_t>();
  c.critic_hidden = r.get<std::int32_t>();
  c.gamma = r.get<double>();
  c.tau_soft = r.get<double>();
  c.actor_lr = r.get<double>();
  c.critic_lr = r.get<double>();
  c.minibatch = r.get<std::int32_t>();
  c.replay_capacity = r.get<std::uint64_t>();
  c.noise.sigma0 = r.get<double>();
  c.noise.decay = r.get<double>();
  c.noise.floor = r.get<double>();
  const auto seed = r.get<std::uint64_t>();
  const auto episodes = r.get<std::int64_t>();

  DdpgAgent agent = [&] {
    try {
      return DdpgAgent(c, seed);
    } catch (const InvalidInput& e) {
      throw DimensionError(std::string("checkpoint: invalid config: ") + e.what());
    }
  }();
  agent.set_episodes_done(episodes);

  read_mlp(r, agent.actor(), "actor");
  for (Mlp* p : agent.critic().parts()) read_mlp(r, *p, "critic");
  read_mlp(r, agent.target_actor(), "target actor");
  for (Mlp* p : agent.target_critic().parts()) read_mlp(r, *p, "target critic");

  read_adam(r, agent.actor_opt());
  for (auto& a : agent.critic_opt()) read_adam(r, a);

  std::istringstream rng_text(r.text());
  rng_text >> agent.rng();
  if (!rng_text) throw DimensionError("checkpoint: bad generator state");
  return agent;
}

DdpgAgent load_checkpoint(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError(path, "cannot open checkpoint");
  try {
    return load_checkpoint(in);
  } catch (const DimensionError& e) {
    throw DimensionError(path + ": " + e.what());
  }
}

}  // namespace shepherd::ddpg
