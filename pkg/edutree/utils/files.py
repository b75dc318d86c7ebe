import os
import sys
import tempfile
from pathlib import Path
from typing import Mapping


def atomic_write_text(path: str | Path, text: str) -> None:
    """
    原子写文件：先写同目录临时文件，成功后再 rename

    Args:
        path: 目标路径，"-" 表示 stdout
        text: 文本内容（UTF-8，LF 换行）
    """
    if str(path) == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return

    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(prefix=f".{target.name}.", suffix=".tmp", dir=str(target.parent))
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp_name, target)
    except BaseException:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise


def write_artifacts(artifacts: Mapping[str, str]) -> None:
    """按顺序写出全部产物；内容必须事先全部生成，保证失败时没有半成品"""
    for path, text in artifacts.items():
        atomic_write_text(path, text)
