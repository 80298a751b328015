from hypothesis import settings

settings.register_profile("synka", deadline=None)
settings.load_profile("synka")
