from sk88_service_locator.modules.service.managers.service_manager import ServiceManager
from modules.asymptotics.config.config import AsymptoticsConfig
from modules.oracle.config.config import OracleConfig
from modules.order.config.config import OrderConfig
from modules.sampler.config.config import SamplerConfig
from modules.series.config.config import SeriesConfig
from modules.structure.config.config import StructureConfig
from modules.util.config.config import UtilConfig


service_locator: ServiceManager or None = None


def get_service_manager() -> ServiceManager:
    """ Get service manager
    Returns:
        ServiceManager
    """
    global service_locator

    if service_locator is None:
        service_locator = ServiceManager()
        service_locator.add(UtilConfig().get())
        service_locator.add(StructureConfig().get())
        service_locator.add(SeriesConfig().get())
        service_locator.add(OrderConfig().get())
        service_locator.add(OracleConfig().get())
        service_locator.add(AsymptoticsConfig().get())
        service_locator.add(SamplerConfig().get())

    return service_locator
