"""
Singleton metaclass for the shared managers.

The console and environment managers hold process-wide state and are created
through this metaclass.
Centralizer shards run on worker threads and may ask for the settings at the
same time, so construction happens under a lock.
"""

import threading
from typing import Any, Dict, Type


class Singleton(type):
    """
    Metaclass that keeps one instance per class.

    Tests reset the registry with clear_instance (one class) or clear_all so
    each case starts from a freshly loaded environment.
    """

    _instances: Dict[Type, Any] = {}
    _lock = threading.RLock()

    def __call__(cls, *args: Any, **kwargs: Any) -> Any:
        """
        Return the existing instance, creating it on first use.

        Args:
            *args: Positional arguments for the first construction.
            **kwargs: Keyword arguments for the first construction.

        Returns:
            The singleton instance of the class.
        """
        instance = Singleton._instances.get(cls)
        if instance is None:
            with Singleton._lock:
                instance = Singleton._instances.get(cls)
                if instance is None:
                    instance = super().__call__(*args, **kwargs)
                    Singleton._instances[cls] = instance
        return instance

    @classmethod
    def clear_instance(cls, target_cls: Type) -> None:
        """
        Drop the cached instance of target_cls.

        Args:
            target_cls: The class whose instance should be cleared.
        """
        with cls._lock:
            cls._instances.pop(target_cls, None)

    @classmethod
    def clear_all(cls) -> None:
        """Drop every cached instance."""
        with cls._lock:
            cls._instances.clear()

    @classmethod
    def has_instance(cls, target_cls: Type) -> bool:
        return target_cls in cls._instances
