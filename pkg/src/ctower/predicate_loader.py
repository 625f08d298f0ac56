"""Predicate loading and management for ctower."""

import importlib
import importlib.util
import logging
import pkgutil
import sys
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Type

from .config import Config
from .exceptions import PredicateError
from .predicates import PREDICATE_REGISTRY
from .predicates.base import BasePredicate
from .predicates.spec import PredicateSpec
from .predicates.table import TablePredicate

logger = logging.getLogger(__name__)


class PredicateLoader:
    """Loads builtin and plugin predicates and builds them from specs."""

    def __init__(self, config: Optional[Config] = None) -> None:
        self.config = config or Config()
        self._loaded: Dict[str, Type[BasePredicate]] = {}

    def load_predicates(self) -> Dict[str, Type[BasePredicate]]:
        """Load all available predicate classes.

        Returns:
            Dictionary mapping predicate names to predicate classes
        """
        if not self._loaded:
            self._load_builtin_predicates()
            for plugin_dir in self.config.plugin_directories:
                self._load_custom_predicates(plugin_dir)
        return self._loaded.copy()

    def _load_builtin_predicates(self) -> None:
        """Import every module of the predicates package to trigger registration."""
        import ctower.predicates

        package_path = Path(ctower.predicates.__file__).parent
        for module_info in pkgutil.walk_packages([str(package_path)], prefix="ctower.predicates."):
            try:
                importlib.import_module(module_info.name)
            except ImportError as e:
                logger.warning("could not load predicate module %s: %s", module_info.name, e)
        self._loaded.update(PREDICATE_REGISTRY)

    def _load_custom_predicates(self, plugin_dir: Path) -> None:
        """Load predicates registered by ``*.py`` files in a plugin directory."""
        if not plugin_dir.exists() or not plugin_dir.is_dir():
            logger.warning("plugin directory %s does not exist", plugin_dir)
            return

        original_path = sys.path.copy()
        try:
            sys.path.insert(0, str(plugin_dir))
            for python_file in sorted(plugin_dir.glob("*.py")):
                if python_file.name.startswith("_"):
                    continue
                try:
                    spec = importlib.util.spec_from_file_location(python_file.stem, python_file)
                    if spec and spec.loader:
                        module = importlib.util.module_from_spec(spec)
                        spec.loader.exec_module(module)
                except Exception as e:
                    logger.warning("could not load plugin predicate from %s: %s", python_file, e)
        finally:
            sys.path = original_path
        self._loaded.update(PREDICATE_REGISTRY)

    def get_predicate(self, name: str, params: Sequence[int] = ()) -> BasePredicate:
        """Instantiate a registered predicate.

        Raises:
            PredicateError: If no predicate of that name is registered
        """
        predicates = self.load_predicates()
        if name not in predicates:
            available = ", ".join(sorted(predicates))
            raise PredicateError(f"unknown predicate {name!r}; available: {available}")
        return predicates[name](params)

    def build(self, spec: PredicateSpec) -> BasePredicate:
        """The predicate a spec describes."""
        if spec.kind == "table":
            return TablePredicate(spec.entries, spec.default)
        if spec.kind == "threshold":
            return self.get_predicate("threshold", spec.acts)
        return self.get_predicate(spec.name or "", spec.params)

    def describe(self) -> List[Dict[str, str]]:
        return [
            {"name": name, "description": cls().description}
            for name, cls in sorted(self.load_predicates().items())
        ]
