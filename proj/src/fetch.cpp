#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "irregular/errors.hpp"
#include "irregular/oeis.hpp"

namespace irregular::oeis {

std::string fetch_bfile(const std::string &a_number,
                        const std::string &endpoint, double timeout_seconds) {
  if (!is_a_number(a_number))
    throw DomainError("not an A-number: " + a_number);
  if (!(timeout_seconds > 0))
    throw DomainError("timeout must be positive");

  // Split "scheme://host[:port][/prefix]" into client base and path prefix.
  const auto scheme_end = endpoint.find("://");
  const auto path_start = endpoint.find('/', scheme_end == std::string::npos
                                                 ? 0
                                                 : scheme_end + 3);
  const std::string base = endpoint.substr(0, path_start);
  std::string prefix =
      path_start == std::string::npos ? "" : endpoint.substr(path_start);
  while (!prefix.empty() && prefix.back() == '/')
    prefix.pop_back();
  const std::string path =
      prefix + "/" + a_number + "/b" + a_number.substr(1) + ".txt";

  httplib::Client client(base);
  if (!client.is_valid())
    throw NetworkError("unsupported endpoint " + endpoint);
  const auto seconds = static_cast<time_t>(timeout_seconds);
  const auto micros =
      static_cast<time_t>((timeout_seconds - static_cast<double>(seconds)) * 1e6);
  client.set_connection_timeout(seconds, micros);
  client.set_read_timeout(seconds, micros);
  client.set_follow_location(true);

  const auto res = client.Get(path);
  if (!res)
    throw NetworkError("GET " + base + path + " failed: " +
                       httplib::to_string(res.error()));
  if (res->status != 200)
    throw HttpStatusError(res->status);
  return res->body;
}

} // namespace irregular::oeis
