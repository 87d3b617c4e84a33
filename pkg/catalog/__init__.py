"""
Catalog plugin auto-discovery system.

This module discovers every catalog entry defined in the catalog directory. Entries are
classes that inherit from BaseCatalogEntry; each one contributes a named group.

Usage:
    from catalog import catalog_build, list_catalog_entries

    # Names of all available entries
    names = list_catalog_entries()

    # Validated, consistency-checked presentation
    pres = catalog_build("phi23", {"p": 5})
"""

import importlib
import inspect
import sys
from functools import lru_cache
from pathlib import Path
from typing import Dict, Optional, Type

from catalog.base import BaseCatalogEntry, Params
from pgc.collector import PcGroup
from pgc.errors import CatalogError, ConsistencyError
from pgc.logging_config import get_logger
from pgc.presentation import PcPresentation

logger = get_logger("engine")


@lru_cache(maxsize=None)
def _discover() -> Dict[str, Type[BaseCatalogEntry]]:
    entries: Dict[str, Type[BaseCatalogEntry]] = {}
    catalog_dir = Path(__file__).parent

    # Files to skip during discovery
    skip_files = {"__init__.py", "base.py"}

    logger.debug(f"Scanning for catalog entries in: {catalog_dir}")

    for file_path in sorted(catalog_dir.glob("*.py")):
        if file_path.name in skip_files or file_path.name.startswith(("_", ".")):
            continue

        full_module_name = f"catalog.{file_path.stem}"
        try:
            if full_module_name in sys.modules:
                module = sys.modules[full_module_name]
            else:
                module = importlib.import_module(full_module_name)
        except ImportError as e:
            logger.error(f"Failed to import {file_path.name}: {e}")
            continue

        for _, obj in inspect.getmembers(module, inspect.isclass):
            if (
                issubclass(obj, BaseCatalogEntry)
                and obj is not BaseCatalogEntry
                and not inspect.isabstract(obj)
                and obj.name
                and obj.__module__ == full_module_name
            ):
                if obj.name in entries:
                    logger.error(f"Duplicate catalog name {obj.name!r} in {file_path.name}, skipped")
                    continue
                entries[obj.name] = obj
                logger.debug(f"Registered catalog entry: {obj.name} from {file_path.name}")

    logger.debug(f"Catalog discovery complete. Found {len(entries)} entries")
    return entries


def get_catalog_entries() -> Dict[str, Type[BaseCatalogEntry]]:
    """
    Return every catalog entry class keyed by catalog name, in name order.

    Example: {'F_mod_R': <class 'FModR'>, 'phi23': <class 'Phi23'>, ...}
    """
    entries = _discover()
    return {name: entries[name] for name in sorted(entries, key=str.lower)}


def list_catalog_entries() -> list[str]:
    return list(get_catalog_entries().keys())


def get_entry_by_name(name: str) -> Optional[BaseCatalogEntry]:
    """
    Get an instance of the entry registered under `name`.

    Returns:
        The entry, or None if no entry has that name
    """
    cls = _discover().get(name)
    return cls() if cls else None


def catalog_build(name: str, params: Optional[Params] = None, check: bool = True) -> PcPresentation:
    """
    Build a catalog group.

    Args:
        name: Catalog name
        params: Parameter values; missing ones take their defaults
        check: Run the consistency check on the result

    Raises:
        CatalogError: unknown entry or constraint violation
        ConsistencyError: the presentation fails the consistency check
    """
    entry = get_entry_by_name(name)
    if entry is None:
        raise CatalogError(f"unknown catalog entry {name!r}")
    resolved = entry.validate(params or {})
    pres = entry.build(resolved)
    if check:
        failure = PcGroup(pres).consistency_check()
        if failure is not None:
            logger.warning(f"{name} {resolved}: {failure.describe()}")
            raise ConsistencyError(failure)
    logger.debug(f"Built {name} {resolved}: order {pres.p}^{pres.n}")
    return pres


__all__ = [
    "get_catalog_entries",
    "list_catalog_entries",
    "get_entry_by_name",
    "catalog_build",
    "BaseCatalogEntry",
]
