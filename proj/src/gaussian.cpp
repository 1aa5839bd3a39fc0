#include "acs/gaussian.hpp"

namespace acs {

Gaussian& Gaussian::operator*=(const Gaussian& o) {
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Gaussian& Gaussian::operator/=(const Gaussian& o) {
  mpq_class n = o.norm();
  if (sgn(n) == 0) throw Error("division by zero in Q(i)");
  mpq_class re = (re_ * o.re_ + im_ * o.im_) / n;
  mpq_class im = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string rational_to_string(const mpq_class& q) { return q.get_str(); }

std::string Gaussian::to_string() const {
  if (sgn(im_) == 0) return rational_to_string(re_);
  if (sgn(re_) == 0) return rational_to_string(im_) + "i";
  std::string s = "(" + rational_to_string(re_);
  s += sgn(im_) < 0 ? "-" : "+";
  s += rational_to_string(abs(im_)) + "i)";
  return s;
}

std::ostream& operator<<(std::ostream& os, const Gaussian& z) { return os << z.to_string(); }

}  // namespace acs
