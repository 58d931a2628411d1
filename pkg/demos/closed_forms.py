# # Closed-form prices under the subdiffusive model

# %%
import numpy as np

from asian_pricer import (
    ModelParams,
    geo_moments_continuous,
    price_european,
    price_geo_asian,
    price_geo_asian_mfbm,
    price_power_asian,
)

p = ModelParams(s0=100.0, r=0.05, q=0.02, sigma=0.2, alpha=0.9, hurst=0.8)
gm = geo_moments_continuous(p, 1.0)
print(f"mu_G = {gm.mu_g:.10f}, var_G = {gm.var_g:.10f}")

# ## Geometric Asian call and put

# %%
for side in ("call", "put"):
    print(side, price_geo_asian(p, 100.0, 1.0, side).price)

# ## Varying the subdiffusion exponent
#
# At T = 1 the mean clock 1/Gamma(alpha+1) is above one for alpha < 1, which
# lifts the geometric price. The European formula uses the rate
# T^(alpha-1)/Gamma(alpha), which is below one here, so it moves the other way.

# %%
for alpha in (0.65, 0.75, 0.85, 0.95, 1.0):
    q = p.replace(alpha=alpha)
    print(f"alpha={alpha:.2f}  geo call {price_geo_asian(q, 100, 1).price:8.4f}"
          f"  european call {price_european(q, 100, 1).price:8.4f}")

# ## Physical time
#
# At alpha = 1 the general routine and the explicit mixed-fBm formula agree.

# %%
q = p.replace(alpha=1.0)
print(price_geo_asian(q, 100, 1).price, price_geo_asian_mfbm(q, 100, 1).price)

# ## Power options on G^n, strikes at S0^n

# %%
for n in (1, 2, 3):
    print(n, price_power_asian(p, 100.0**n, 1.0, n).price)

# ## Call prices across strikes

# %%
strikes = np.linspace(80, 120, 9)
print(np.array([price_geo_asian(p, k, 1.0).price for k in strikes]).round(4))
