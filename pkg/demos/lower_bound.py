# # Bounding the arithmetic Asian call

# %%
from asian_pricer import ModelParams, MonitoringGrid, lower_bound_price, price_geo_asian_discrete

p = ModelParams(s0=100.0, r=0.05, q=0.02, sigma=0.2, alpha=0.9, hurst=0.8)
grid = MonitoringGrid.uniform(12, 1.0)

# ## Geometric price below, conditioning bound above it
#
# Conditioning on the geometric average and keeping the positive part only
# where the conditional arithmetic mean exceeds the strike gives a price that
# sits between the geometric and the arithmetic option.

# %%
for k in (90.0, 100.0, 110.0):
    b = lower_bound_price(p, grid, k)
    g = price_geo_asian_discrete(p, grid, k).price
    print(f"K={k:5.1f}  geometric {g:8.4f}  bound {b.bound:8.4f}  K* {b.k_tilde:8.4f}")

# ## One date: nothing to average, the bound is exact

# %%
one = MonitoringGrid((1.0,), 1.0)
print(lower_bound_price(p, one, 100.0).bound, price_geo_asian_discrete(p, one, 100.0).price)

# ## Conditioning on the continuous average instead

# %%
print(lower_bound_price(p, grid, 100.0, continuous_geometric=True).bound)
