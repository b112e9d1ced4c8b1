// Copyright 2026 The sdtree Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "sdtree/transport.h"

namespace sdtree {

// Channel over a TCP connection. Frames are {u32 payload length, u8 phase
// tag, payload}, little-endian. Elapsed time is measured on the wall clock;
// the link model's latency is not simulated on real sockets.
class TcpChannel final : public Channel {
 public:
  // Party 0 listens, party 1 connects; both block until connected or the
  // timeout expires.
  static std::unique_ptr<TcpChannel> listen(std::uint16_t port, LinkModel link = {},
                                            std::chrono::milliseconds timeout =
                                                std::chrono::milliseconds(30000));
  static std::unique_ptr<TcpChannel> connect(const std::string& host, std::uint16_t port,
                                             LinkModel link = {},
                                             std::chrono::milliseconds timeout =
                                                 std::chrono::milliseconds(30000));
  // Listens on an ephemeral port; returns the socket and the port number.
  // accept() must then be called to obtain the channel.
  class Listener {
   public:
    explicit Listener(std::uint16_t port);
    ~Listener();
    Listener(const Listener&) = delete;
    Listener& operator=(const Listener&) = delete;
    std::uint16_t port() const { return port_; }
    std::unique_ptr<TcpChannel> accept(LinkModel link, std::chrono::milliseconds timeout);

   private:
    int fd_ = -1;
    std::uint16_t port_ = 0;
  };

  ~TcpChannel() override;
  void close() override;

 protected:
  void push(Frame frame) override;
  Frame pop(std::chrono::milliseconds timeout) override;

 private:
  TcpChannel(Party self, LinkModel link, int fd);
  void read_exact(std::uint8_t* out, std::size_t n, std::chrono::milliseconds timeout);

  int fd_;
};

}  // namespace sdtree
