"""全局配置管理 - 从 .env 文件加载配置"""

import os
from dataclasses import dataclass, field
from pathlib import Path

from dotenv import load_dotenv


def _load_env() -> None:
    """加载 .env 文件"""
    env_path = Path(__file__).resolve().parent.parent / ".env"
    load_dotenv(env_path)


_load_env()


@dataclass
class EnumConfig:
    """穷举与运算表相关配置"""

    max_enum: int = field(
        default_factory=lambda: int(os.getenv("NIE_MAX_ENUM", str(2**20)))
    )
    table_limit: int = field(
        default_factory=lambda: int(os.getenv("NIE_TABLE_LIMIT", "256"))
    )


@dataclass
class VerifyConfig:
    """定理验证套件配置"""

    max_ring_size: int = field(
        default_factory=lambda: int(os.getenv("NIE_MAX_RING_SIZE", "512"))
    )
    max_algebra_size: int = field(
        default_factory=lambda: int(os.getenv("NIE_MAX_ALGEBRA_SIZE", "4096"))
    )
    full_lattice_size: int = field(
        default_factory=lambda: int(os.getenv("NIE_FULL_LATTICE_SIZE", "512"))
    )
    sample_size: int = field(
        default_factory=lambda: int(os.getenv("NIE_SAMPLE_SIZE", "24"))
    )
    seed: int = field(default_factory=lambda: int(os.getenv("NIE_SEED", "0")))


@dataclass
class OutputConfig:
    """报告输出配置"""

    output_format: str = field(
        default_factory=lambda: os.getenv("NIE_OUTPUT_FORMAT", "json")
    )


@dataclass
class AppConfig:
    """应用全局配置"""

    enum: EnumConfig = field(default_factory=EnumConfig)
    verify: VerifyConfig = field(default_factory=VerifyConfig)
    output: OutputConfig = field(default_factory=OutputConfig)


def get_config() -> AppConfig:
    """获取应用配置"""
    return AppConfig()

