import hypothesis

hypothesis.settings.register_profile(
    "slq2",
    max_examples=40,
    deadline=None,
    derandomize=True,
)
hypothesis.settings.load_profile("slq2")
