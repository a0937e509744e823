#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Levy Kinetic Asymptotics Lab                                                        #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.12                                                                             #
# Filename   : /levykin/service/io.py                                                              #
# ------------------------------------------------------------------------------------------------ #
# Created    : Monday October 12th 2026 09:49:49 am                                                #
# Modified   : Thursday October 15th 2026 12:26:15 pm                                              #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""File input/output dispatched on the file extension."""
from abc import ABC, abstractmethod
import os
import logging
import json
from typing import Any, Optional

import yaml
import pandas as pd

# ------------------------------------------------------------------------------------------------ #
logger = logging.getLogger(__name__)
# ------------------------------------------------------------------------------------------------ #
FLOAT_FORMAT = "%.17g"


class IO(ABC):  # pragma: no cover
    @classmethod
    def read(cls, filepath: str, *args, **kwargs) -> Any:
        data = cls._read(filepath, **kwargs)
        return data

    @classmethod
    @abstractmethod
    def _read(cls, filepath: str, **kwargs) -> Any:
        pass

    @classmethod
    def write(cls, filepath: str, data: Any, *args, **kwargs) -> None:
        directory = os.path.dirname(filepath)
        if directory:
            os.makedirs(directory, exist_ok=True)
        cls._write(filepath, data, **kwargs)

    @classmethod
    @abstractmethod
    def _write(cls, filepath: str, data: Any, **kwargs) -> None:
        pass


# ------------------------------------------------------------------------------------------------ #
#                                        CSV IO                                                    #
# ------------------------------------------------------------------------------------------------ #
class CSVIO(IO):
    """Tables with an optional block of ``#``-prefixed header lines.

    The header carries the resolved configuration of the run that produced the table, dumped as
    YAML. Floats are written with round-trip precision so reruns produce identical bytes.
    """

    @classmethod
    def _read(
        cls,
        filepath: str,
        sep: str = ",",
        comment: Optional[str] = "#",
        encoding: str = "utf-8",
        **kwargs,
    ) -> pd.DataFrame:
        return pd.read_csv(filepath, sep=sep, comment=comment, encoding=encoding)

    @classmethod
    def _write(
        cls,
        filepath: str,
        data: pd.DataFrame,
        sep: str = ",",
        index: bool = False,
        header: Optional[dict] = None,
        encoding: str = "utf-8",
        **kwargs,
    ) -> None:
        with open(filepath, "w", encoding=encoding, newline="") as f:
            if header:
                text = yaml.safe_dump(header, sort_keys=True, default_flow_style=False)
                for line in text.splitlines():
                    f.write(f"# {line}\n")
            data.to_csv(f, sep=sep, index=index, float_format=FLOAT_FORMAT, lineterminator="\n")

    @classmethod
    def read_header(cls, filepath: str) -> dict:
        """Parses the ``#`` header block back into a dictionary."""
        lines = []
        with open(filepath, "r", encoding="utf-8") as f:
            for line in f:
                if not line.startswith("# "):
                    break
                lines.append(line[2:])
        return yaml.safe_load("".join(lines)) or {}


# ------------------------------------------------------------------------------------------------ #
#                                        YAML IO                                                   #
# ------------------------------------------------------------------------------------------------ #
class YamlIO(IO):
    @classmethod
    def _read(cls, filepath: str, **kwargs) -> dict:
        with open(filepath, "r") as f:
            try:
                return yaml.safe_load(f)
            except yaml.YAMLError as e:
                logger.error(e)
                raise

    @classmethod
    def _write(cls, filepath: str, data: Any, **kwargs) -> None:
        with open(filepath, "w") as f:
            try:
                yaml.safe_dump(data, f, sort_keys=True, default_flow_style=False)
            except yaml.YAMLError as e:  # pragma: no cover
                logger.error(e)
                raise IOError(e)


# ------------------------------------------------------------------------------------------------ #
#                                          JSON                                                    #
# ------------------------------------------------------------------------------------------------ #
class JsonIO(IO):
    @classmethod
    def _read(cls, filepath: str, **kwargs) -> Any:
        """Read the parsed dictionary from a json file."""
        with open(filepath) as json_file:
            return json.load(json_file)

    @classmethod
    def _write(cls, filepath: str, data: dict, **kwargs) -> None:
        """Writes a dictionary to a json file."""
        if not isinstance(data, dict):
            msg = "JsonIO supports dictionaries only."
            logger.error(msg)
            raise ValueError(msg)
        with open(filepath, "w") as json_file:
            json.dump(data, json_file, indent=2, sort_keys=True)


# ------------------------------------------------------------------------------------------------ #
#                                       IO SERVICE                                                 #
# ------------------------------------------------------------------------------------------------ #
class IOService:
    __io = {
        "csv": CSVIO,
        "yaml": YamlIO,
        "yml": YamlIO,
        "json": JsonIO,
    }

    @classmethod
    def read(cls, filepath: str, **kwargs) -> Any:
        io = cls._get_io(filepath)
        return io.read(filepath, **kwargs)

    @classmethod
    def write(cls, filepath: str, data: Any, **kwargs) -> None:
        io = cls._get_io(filepath)
        io.write(filepath=filepath, data=data, **kwargs)

    @classmethod
    def _get_io(cls, filepath: str) -> IO:
        if filepath is None:
            msg = "Filepath is None"
            logger.error(msg)
            raise ValueError(msg)
        file_format = os.path.splitext(str(filepath))[1].replace(".", "").lower()
        try:
            return IOService.__io[file_format]
        except KeyError:
            msg = "File type {} is not supported.".format(file_format)
            logger.error(msg)
            raise ValueError(msg)
