"""领域异常定义

所有异常都继承自 NIEError (它本身是 ValueError),
命令行据此区分领域错误 (退出码 1) 与用法错误 (退出码 2)。
"""


class NIEError(ValueError):
    """工具箱所有领域异常的基类"""


class SpecSyntaxError(NIEError):
    """规格字符串 (环 / 代数 / 多项式 / PIR) 无法解析"""


class NonPrime(NIEError):
    """特征 p 不是素数"""


class ReducibleModulus(NIEError):
    """模多项式在模 p 意义下可约"""


class DegreeMismatch(NIEError):
    """模多项式不是首一的 m 次多项式"""


class RingMismatch(NIEError):
    """参与运算的元素不属于同一个环"""


class NotAUnit(NIEError):
    """元素不可逆"""


class IndexOutOfRange(NIEError):
    """下标 (商环阶数、挠码下标、分量下标等) 越界"""


class TooLarge(NIEError):
    """穷举规模超过配置的上限"""

    def __init__(self, size: int, cap: int) -> None:
        super().__init__(f"穷举规模 {size} 超过上限 {cap} (可通过 NIE_MAX_ENUM 调整)")
        self.size = size
        self.cap = cap


class AlgebraMismatch(NIEError):
    """多项式或码不属于同一个商代数"""


class LengthMismatch(NIEError):
    """向量或码长不一致"""


class NotNIE(NIEError):
    """λ 可逆, 仅对 NIE 情形成立的结论不适用"""


class ComponentMismatch(NIEError):
    """PIR 分量与给定的码不匹配"""


class ZeroCode(NIEError):
    """零码上的运算无定义"""


class FullCode(NIEError):
    """全空间码 R^n 的对偶为零码, 运算无定义"""


class BadParameters(NIEError):
    """构造参数不满足前提条件"""
