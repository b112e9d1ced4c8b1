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

#include "sdtree/tcp_channel.h"

#include <arpa/inet.h>
#include <netdb.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <thread>

#include "sdtree/errors.h"

namespace sdtree {

namespace {

[[noreturn]] void sys_fail(const std::string& what) {
  throw ProtocolError(what + ": " + std::strerror(errno));
}

void set_nodelay(int fd) {
  int one = 1;
  ::setsockopt(fd, IPPROTO_TCP, TCP_NODELAY, &one, sizeof(one));
}

}  // namespace

TcpChannel::Listener::Listener(std::uint16_t port) {
  fd_ = ::socket(AF_INET, SOCK_STREAM, 0);
  if (fd_ < 0) sys_fail("socket");
  int one = 1;
  ::setsockopt(fd_, SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_addr.s_addr = htonl(INADDR_ANY);
  addr.sin_port = htons(port);
  if (::bind(fd_, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) < 0) sys_fail("bind");
  if (::listen(fd_, 1) < 0) sys_fail("listen");
  socklen_t len = sizeof(addr);
  ::getsockname(fd_, reinterpret_cast<sockaddr*>(&addr), &len);
  port_ = ntohs(addr.sin_port);
}

TcpChannel::Listener::~Listener() {
  if (fd_ >= 0) ::close(fd_);
}

std::unique_ptr<TcpChannel> TcpChannel::Listener::accept(LinkModel link,
                                                         std::chrono::milliseconds timeout) {
  pollfd p{fd_, POLLIN, 0};
  const int rc = ::poll(&p, 1, static_cast<int>(timeout.count()));
  if (rc == 0) throw ProtocolError("timed out waiting for peer connection");
  if (rc < 0) sys_fail("poll");
  const int fd = ::accept(fd_, nullptr, nullptr);
  if (fd < 0) sys_fail("accept");
  set_nodelay(fd);
  return std::unique_ptr<TcpChannel>(new TcpChannel(Party::kZero, link, fd));
}

std::unique_ptr<TcpChannel> TcpChannel::listen(std::uint16_t port, LinkModel link,
                                               std::chrono::milliseconds timeout) {
  Listener l(port);
  return l.accept(link, timeout);
}

std::unique_ptr<TcpChannel> TcpChannel::connect(const std::string& host, std::uint16_t port,
                                                LinkModel link,
                                                std::chrono::milliseconds timeout) {
  addrinfo hints{};
  hints.ai_family = AF_INET;
  hints.ai_socktype = SOCK_STREAM;
  addrinfo* res = nullptr;
  if (::getaddrinfo(host.c_str(), std::to_string(port).c_str(), &hints, &res) != 0 || !res) {
    throw ProtocolError("cannot resolve " + host);
  }
  const auto deadline = std::chrono::steady_clock::now() + timeout;
  for (;;) {
    const int fd = ::socket(AF_INET, SOCK_STREAM, 0);
    if (fd < 0) {
      ::freeaddrinfo(res);
      sys_fail("socket");
    }
    if (::connect(fd, res->ai_addr, res->ai_addrlen) == 0) {
      ::freeaddrinfo(res);
      set_nodelay(fd);
      return std::unique_ptr<TcpChannel>(new TcpChannel(Party::kOne, link, fd));
    }
    ::close(fd);
    if (std::chrono::steady_clock::now() > deadline) {
      ::freeaddrinfo(res);
      throw ProtocolError("could not connect to " + host + ":" + std::to_string(port));
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(50));
  }
}

TcpChannel::TcpChannel(Party self, LinkModel link, int fd) : Channel(self, link), fd_(fd) {
  clock().use_wall_clock();
}

TcpChannel::~TcpChannel() { close(); }

void TcpChannel::close() {
  if (fd_ >= 0) {
    ::shutdown(fd_, SHUT_RDWR);
    ::close(fd_);
    fd_ = -1;
  }
}

void TcpChannel::push(Frame frame) {
  if (fd_ < 0) throw ProtocolError("send on closed channel");
  ByteWriter header;
  header.put_u32(static_cast<std::uint32_t>(frame.payload.size()));
  header.put_u8(frame.phase_tag);
  Bytes buf = header.take();
  buf.insert(buf.end(), frame.payload.begin(), frame.payload.end());
  std::size_t off = 0;
  while (off < buf.size()) {
    const ssize_t n = ::send(fd_, buf.data() + off, buf.size() - off, MSG_NOSIGNAL);
    if (n < 0) {
      if (errno == EINTR) continue;
      sys_fail("send");
    }
    off += static_cast<std::size_t>(n);
  }
}

void TcpChannel::read_exact(std::uint8_t* out, std::size_t n,
                            std::chrono::milliseconds timeout) {
  std::size_t off = 0;
  while (off < n) {
    pollfd p{fd_, POLLIN, 0};
    const int rc = ::poll(&p, 1, static_cast<int>(timeout.count()));
    if (rc == 0) throw ProtocolError("receive timed out (protocol desynchronized?)");
    if (rc < 0) {
      if (errno == EINTR) continue;
      sys_fail("poll");
    }
    const ssize_t got = ::recv(fd_, out + off, n - off, 0);
    if (got == 0) throw ProtocolError("peer closed the connection");
    if (got < 0) {
      if (errno == EINTR) continue;
      sys_fail("recv");
    }
    off += static_cast<std::size_t>(got);
  }
}

Channel::Frame TcpChannel::pop(std::chrono::milliseconds timeout) {
  if (fd_ < 0) throw ProtocolError("receive on closed channel");
  std::uint8_t header[5];
  read_exact(header, sizeof(header), timeout);
  ByteReader r(header);
  const std::uint32_t len = r.get_u32();
  Frame f;
  f.phase_tag = r.get_u8();
  f.payload.resize(len);
  if (len > 0) read_exact(f.payload.data(), len, timeout);
  return f;
}

}  // namespace sdtree
