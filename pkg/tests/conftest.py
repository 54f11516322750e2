import sys

from hypothesis import HealthCheck, settings

# Exact values in this suite reach hundreds of thousands of digits.
sys.set_int_max_str_digits(2_000_000)

settings.register_profile(
    "default",
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
    deadline=None,
)
settings.load_profile("default")
