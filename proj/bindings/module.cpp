// Copyright 2026 The Ariadne Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ariadne/config.hpp"
#include "ariadne/simnet.hpp"
#include "ariadne/vectors.hpp"

namespace py = pybind11;

namespace {

using namespace ariadne;

template <std::size_t N>
std::array<std::uint8_t, N> to_array(const py::bytes& b, const char* what) {
  std::string s = b;
  if (s.size() != N) {
    throw py::value_error(std::string(what) + " must be " + std::to_string(N) +
                          " bytes");
  }
  std::array<std::uint8_t, N> out;
  std::copy(s.begin(), s.end(), out.begin());
  return out;
}

template <std::size_t N>
py::bytes to_bytes(const std::array<std::uint8_t, N>& a) {
  return py::bytes(reinterpret_cast<const char*>(a.data()), a.size());
}

py::bytes to_bytes(const std::vector<std::uint8_t>& v) {
  return py::bytes(reinterpret_cast<const char*>(v.data()), v.size());
}

std::vector<std::uint8_t> to_vec(const py::bytes& b) {
  std::string s = b;
  return std::vector<std::uint8_t>(s.begin(), s.end());
}

/// Thin simulator facade: addresses and keys cross the boundary as bytes.
class Network {
 public:
  Network(std::uint64_t seed, const py::bytes& pattern, std::size_t window)
      : net_(seed, Pattern{to_array<kPatternLen>(pattern, "pattern")},
             window) {}

  py::bytes add_node(const py::bytes& addr) {
    auto& node = net_.add_node(to_array<kAddrLen>(addr, "address"));
    return to_bytes(node.dh.pk.bytes);
  }

  std::uint64_t provision(const py::bytes& addr, const py::bytes& master) {
    return net_.provision(to_array<kAddrLen>(addr, "address"),
                          MasterKey{to_array<kKeyLen>(master, "master key")});
  }

  /// Negotiates master keys along a path of node addresses; returns the
  /// source's copy of each negotiated key.
  std::vector<py::bytes> setup(const std::vector<py::bytes>& path) {
    std::vector<SetupHop> hops;
    for (const auto& a : path) {
      Address addr = to_array<kAddrLen>(a, "address");
      hops.push_back({addr, net_.node(addr).dh.pk});
    }
    auto result = net_.run_setup(hops, {});
    if (!result.run.delivered) {
      throw py::value_error("setup packet was not delivered");
    }
    std::vector<py::bytes> masters;
    for (const auto& hop : result.chain.hops) {
      masters.push_back(to_bytes(hop.master.bytes));
    }
    return masters;
  }

  /// Sends one data packet with counter t; returns the delivered payload
  /// or None when the packet was dropped.
  py::object send(const std::vector<std::pair<py::bytes, py::bytes>>& path,
                  const py::bytes& payload, std::uint64_t t) {
    std::vector<PathHop> hops;
    for (const auto& [a, k] : path) {
      hops.push_back({to_array<kAddrLen>(a, "address"),
                      MasterKey{to_array<kKeyLen>(k, "master key")}});
    }
    std::vector<std::vector<std::uint8_t>> payloads{to_vec(payload)};
    auto results = net_.run_path(hops, payloads, t);
    if (results[0].delivered) return to_bytes(*results[0].delivered);
    return py::none();
  }

  std::size_t tap_count() const { return net_.taps().size(); }

 private:
  SimNetwork net_;
};

}  // namespace

PYBIND11_MODULE(_ariadne, m) {
  m.doc() = "Privacy-preserving source-routed onion protocol core";
  crypto_init();

  m.attr("KEY_LEN") = kKeyLen;
  m.attr("MAC_LEN") = kMacLen;
  m.attr("PATTERN_LEN") = kPatternLen;
  m.attr("ADDR_LEN") = kAddrLen;
  m.attr("ELEMENT_LEN") = kElementLen;
  m.attr("MAX_HOPS") = kMaxHops;
  m.attr("VECTOR_LEN") = kVectorLen;
  m.attr("FRAME_LEN") = kFrameLen;
  m.attr("DATA_PAYLOAD_LEN") = kDataPayloadLen;
  m.attr("SETUP_PAYLOAD_LEN") = kSetupPayloadLen;
  m.attr("DEFAULT_WINDOW") = kDefaultWindow;

  m.def(
      "derive_temp_keys",
      [](const py::bytes& master, std::uint64_t t) {
        TempKeyPair keys = derive_temp_keys(
            MasterKey{to_array<kKeyLen>(master, "master key")}, t);
        return py::make_tuple(to_bytes(keys.enc), to_bytes(keys.mac));
      },
      py::arg("master"), py::arg("t"),
      "Per-packet (enc, mac) key pair for counter t.");

  m.def(
      "keystream",
      [](const py::bytes& key, std::size_t len) {
        auto k = to_array<kKeyLen>(key, "key");
        return to_bytes(keystream(k, len));
      },
      py::arg("key"), py::arg("len"));

  m.def(
      "mac",
      [](const py::bytes& key, const py::bytes& msg) {
        auto k = to_array<kKeyLen>(key, "key");
        return to_bytes(mac(k, to_vec(msg)).bytes);
      },
      py::arg("key"), py::arg("msg"), "16-byte keyed tag.");

  m.def(
      "encrypt_pattern",
      [](const py::bytes& key, const py::bytes& pattern) {
        auto k = to_array<kKeyLen>(key, "key");
        return to_bytes(encrypt_pattern(
            k, Pattern{to_array<kPatternLen>(pattern, "pattern")}));
      },
      py::arg("key"), py::arg("pattern"),
      "Encrypted key reference carried in a routing element.");

  m.def("address_for_name", [](const std::string& name) {
    return to_bytes(address_for_name(name));
  });

  m.def("golden_test_vectors", &golden_test_vectors);

  py::class_<Network>(m, "Network",
                      "In-process node topology with lossless delivery.")
      .def(py::init<std::uint64_t, const py::bytes&, std::size_t>(),
           py::arg("seed"), py::arg("pattern"),
           py::arg("window") = kDefaultWindow)
      .def("add_node", &Network::add_node, py::arg("addr"),
           "Adds a node; returns its DH public key.")
      .def("provision", &Network::provision, py::arg("addr"),
           py::arg("master"), "Installs a data session directly.")
      .def("setup", &Network::setup, py::arg("path"))
      .def("send", &Network::send, py::arg("path"), py::arg("payload"),
           py::arg("t") = 0)
      .def("tap_count", &Network::tap_count);
}
