import os

from hypothesis import settings

settings.register_profile("default", max_examples=100)
settings.register_profile("thorough", max_examples=500)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))
