# # Simulating the random clock

# %%
import math

from asian_pricer import Contract, Kind, McConfig, ModelParams, MonitoringGrid, mc_price
from asian_pricer import lower_bound_price, price_geo_asian_discrete
from asian_pricer.mc_engine import exact_fbm_moment, gaussian_fbm_moment, subordinated_moments

p = ModelParams(s0=100.0, r=0.05, q=0.02, sigma=0.2, alpha=0.9, hurst=0.8)
grid = MonitoringGrid.uniform(12, 1.0)
cfg = McConfig(n_paths=100_000, seed=1)

# ## Moments at the end of the random clock
#
# The clock mean matches 1/Gamma(alpha+1). For the fractional part the exact
# second moment Gamma(2H+1)/Gamma(2 alpha H+1) differs from the value the
# Gaussian closed forms use.

# %%
m = subordinated_moments(p.alpha, p.hurst, 1.0, cfg)
print("E[T]", m["t_alpha"].mean, "+/-", m["t_alpha"].std_error, "vs", 1 / math.gamma(p.alpha + 1))
fbm = m["fbm_sq"]
print("E[B^H(T)^2]", fbm.mean, "+/-", fbm.std_error)
print("  exact    ", exact_fbm_moment(p.alpha, p.hurst), f"z = {fbm.z_score(exact_fbm_moment(p.alpha, p.hurst)):+.2f}")
print("  Gaussian ", gaussian_fbm_moment(p.alpha, p.hurst), f"z = {fbm.z_score(gaussian_fbm_moment(p.alpha, p.hurst)):+.2f}")

# ## Arithmetic Asian call by simulation, next to the analytic numbers

# %%
est = mc_price(p, Contract(Kind.ARITH_ASIAN, "call", 100.0, 1.0), grid, cfg)
print("MC arithmetic ", est.price, "+/-", est.std_error)
print("lower bound   ", lower_bound_price(p, grid, 100.0).bound)
print("geometric     ", price_geo_asian_discrete(p, grid, 100.0).price)

# ## In physical time the simulation and the closed form describe the same model

# %%
q = p.replace(alpha=1.0)
est = mc_price(q, Contract(Kind.GEO_ASIAN, "call", 100.0, 1.0), grid, McConfig(n_paths=100_000, seed=2, antithetic=True))
print(est.price, "+/-", est.std_error, "vs", price_geo_asian_discrete(q, grid, 100.0).price)
