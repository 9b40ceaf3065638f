import os
import sys

import hypothesis

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

hypothesis.settings.register_profile("dev", max_examples=25, deadline=None)
hypothesis.settings.register_profile("ci", max_examples=200, deadline=None, derandomize=True)
hypothesis.settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "dev"))


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running scale checks, run with HAMCOUNT_SLOW_TESTS=1")
