__title__ = "evpkit"
__version__ = "0.1.0"
__description__ = "Exact vector Ekeland principle on finite metric spaces, with checkable certificates"
