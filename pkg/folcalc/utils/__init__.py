from folcalc.utils.logger import capture_warnings, set_level

__all__ = ["capture_warnings", "set_level"]
