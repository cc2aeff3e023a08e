#pragma once

namespace mindgames {

// Standard normal density, CDF, and quantile. Used by the rating engine
// (win/draw moments, draw margins) and the Wilson interval z-score.
double norm_pdf(double x);
double norm_cdf(double x);
double norm_ppf(double p);  // inverse CDF; p in (0, 1)

}  // namespace mindgames
