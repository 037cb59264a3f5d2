from hypothesis import settings

# reproducible CI runs: no wall-clock deadlines, stable example choice
settings.register_profile("repeatable", deadline=None, derandomize=True)
settings.load_profile("repeatable")
