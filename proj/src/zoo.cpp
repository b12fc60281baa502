#include "gammaq/zoo.hpp"

#include <charconv>

#include "gammaq/rng.hpp"

namespace gammaq {

namespace {

PureState kron_product(const Dims& dims, const std::vector<cvector_t>& locals) {
  cvector_t acc{complex_t{1.0, 0.0}};
  for (const cvector_t& v : locals) {
    cvector_t next(acc.size() * v.size());
    std::size_t t = 0;
    for (const complex_t& a : acc) {
      for (const complex_t& b : v) {
        next[t++] = a * b;
      }
    }
    acc = std::move(next);
  }
  return PureState(dims, std::move(acc));
}

int parse_int(const std::string& text) {
  int value = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    throw ValidationError("zoo: cannot parse integer '" + text + "'");
  }
  return value;
}

std::uint64_t parse_seed(const std::string& text) {
  std::uint64_t value = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    throw ValidationError("zoo: cannot parse seed '" + text + "'");
  }
  return value;
}

}  // namespace

PureState ghz() { return cat(3); }

PureState bell() { return cat(2); }

PureState cat(int m) {
  if (m < 2) {
    throw ValidationError("zoo: cat state needs at least 2 subsystems");
  }
  const Dims dims(std::vector<int>(m, 2));
  return make_state(dims, {{MultiIndex(m, 1), 1.0}, {MultiIndex(m, 2), 1.0}});
}

PureState w() {
  const Dims dims({2, 2, 2});
  return make_state(dims, {{{1, 1, 2}, 1.0}, {{1, 2, 1}, 1.0}, {{2, 1, 1}, 1.0}});
}

PureState psi1() {
  const Dims dims({2, 2, 2, 2});
  return make_state(dims, {{{1, 1, 1, 2}, 1.0},
                           {{1, 2, 1, 1}, 1.0},
                           {{2, 1, 2, 1}, 1.0},
                           {{2, 2, 2, 2}, 1.0}});
}

PureState psi2() {
  const Dims dims({2, 2, 2, 2});
  return make_state(dims, {{{1, 2, 2, 1}, 1.0},
                           {{2, 1, 1, 2}, 1.0},
                           {{1, 2, 2, 2}, 1.0},
                           {{2, 1, 1, 1}, 1.0}});
}

PureState product_state(std::uint64_t seed, const Dims& dims) {
  Rng rng(seed);
  std::vector<cvector_t> locals;
  locals.reserve(dims.count());
  for (int u = 1; u <= dims.count(); ++u) {
    cvector_t v(dims.dim(u));
    double norm2 = 0.0;
    for (complex_t& c : v) {
      c = rng.normal_complex();
      norm2 += std::norm(c);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (complex_t& c : v) {
      c *= inv;
    }
    locals.push_back(std::move(v));
  }
  return kron_product(dims, locals);
}

PureState random_state(std::uint64_t seed, const Dims& dims) {
  Rng rng(seed);
  cvector_t amps(dims.joint_dim());
  for (complex_t& c : amps) {
    c = rng.normal_complex();
  }
  return PureState(dims, std::move(amps));
}

Dims parse_dims(const std::string& text) {
  std::vector<int> dims;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t next = text.find('x', pos);
    const std::string part = text.substr(pos, next == std::string::npos ? next : next - pos);
    if (part.empty()) {
      throw ValidationError("zoo: malformed dims '" + text + "'");
    }
    dims.push_back(parse_int(part));
    if (next == std::string::npos) {
      break;
    }
    pos = next + 1;
  }
  return Dims(dims);
}

PureState zoo(const std::string& name, std::uint64_t default_seed) {
  if (name == "ghz" || name == "ghz3") {
    return ghz();
  }
  if (name == "w" || name == "w3") {
    return w();
  }
  if (name == "bell") {
    return bell();
  }
  if (name == "psi1") {
    return psi1();
  }
  if (name == "psi2") {
    return psi2();
  }
  if (name.rfind("cat", 0) == 0 && name.size() > 3) {
    return cat(parse_int(name.substr(3)));
  }
  if (name.rfind("random:", 0) == 0 || name.rfind("product:", 0) == 0) {
    const bool is_random = name.front() == 'r';
    const std::size_t head = name.find(':') + 1;
    const std::size_t tail = name.find(':', head);
    const std::string dims_text =
        name.substr(head, tail == std::string::npos ? tail : tail - head);
    const std::uint64_t seed =
        tail == std::string::npos ? default_seed : parse_seed(name.substr(tail + 1));
    const Dims dims = parse_dims(dims_text);
    return is_random ? random_state(seed, dims) : product_state(seed, dims);
  }
  throw ValidationError("zoo: unknown state name '" + name + "'");
}

std::vector<std::string> zoo_names() {
  return {"ghz",  "w",    "bell", "cat<m>  (e.g. cat4)",
          "psi1", "psi2", "random:<dims>[:<seed>]  (e.g. random:2x2x2:7)",
          "product:<dims>[:<seed>]"};
}

}  // namespace gammaq
